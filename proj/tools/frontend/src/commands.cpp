#include "germs/frontend/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "germs/frontend/parser.hpp"
#include "germs/jetspace.hpp"

namespace germs::frontend {

namespace {

using Handler = std::function<CommandResult(const std::vector<std::string>&, const RunConfig&)>;

void need(const std::vector<std::string>& ops, std::size_t n, const std::string& usage) {
  if (ops.size() != n) throw ParseError(Span{}, "usage: " + usage);
}

int cap_exit(bool complete) { return complete ? kOk : kResourceCap; }

GeneratedGroup make_group(const std::string& src, int trunc) {
  GroupSpec g = read_group(src, trunc);
  return {g.names, g.gens};
}

Json word_json(const GeneratedGroup& g, const Word& w) { return g.format(w); }

Json ui_entry(const GeneratedGroup& g, const UiEntry& e) {
  Json j;
  j["word"] = word_json(g, e.word);
  j["value"] = to_json(e.value);
  return j;
}

Json level_json(const CommutatorLevel& l) {
  Json j;
  j["size"] = l.size;
  j["identity"] = l.identity;
  j["tangentToIdentity"] = l.tangent_to_identity;
  j["unipotent"] = l.unipotent;
  j["general"] = l.general;
  j["minContact"] = l.min_contact < 0 ? Json(nullptr) : Json(l.min_contact);
  j["capped"] = l.capped;
  return j;
}

Json series_json(const GeneratedGroup& g, const SeriesReport& r) {
  Json j;
  j["levels"] = Json::array();
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    Json l = level_json(r.levels[i]);
    l["words"] = Json::array();
    for (const auto& e : r.samples[i]) l["words"].push_back(g.format(e.word));
    j["levels"].push_back(std::move(l));
  }
  j["terminates"] = r.terminates();
  return j;
}

CommandResult cmd_intersect(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 2, "intersect CURVE CURVE");
  CurveParam a = read_curve(ops[0], cfg.trunc), b = read_curve(ops[1], cfg.trunc);
  if (cfg.method != "order" && cfg.method != "noether" && cfg.method != "both")
    throw ParseError(Span{}, "unknown method '" + cfg.method + "'", {"order", "noether", "both"});
  Json j;
  if (cfg.method != "noether") j["order"] = to_json(intersect_order(a, b));
  if (cfg.method != "order") j["noether"] = to_json(intersect_noether(a, b, cfg.depth));
  return {j};
}

CommandResult cmd_inp(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "inp CURVE");
  CurveParam c = read_curve(ops[0], cfg.trunc);
  NearPointSeq seq = near_points_partial(c, cfg.depth);
  Json j;
  j["curve"] = print(c, cfg.trunc);
  j["multiplicity"] = to_json(multiplicity(c));
  j["tangent"] = tangent_direction(c).line();
  j["points"] = Json::array();
  for (const auto& p : seq.points) j["points"].push_back(p.to_string());
  j["multiplicities"] = seq.mults;
  j["depth"] = seq.depth();
  j["complete"] = static_cast<int>(seq.depth()) == cfg.depth;
  return {j};
}

CommandResult cmd_blowup(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "blowup CURVE");
  CurveParam c = read_curve(ops[0], cfg.trunc);
  StrictTransform st = strict_transform(c);
  Json j;
  j["point"] = st.point.to_string();
  j["chart"] = st.point.chart == NearPoint::Chart::first ? 1 : 2;
  j["transform"] = print(st.curve, cfg.trunc);
  return {j};
}

CommandResult cmd_lift(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "lift DIFFEO|VFIELD --dir a:b");
  TangentDirection dir = cfg.dir.value_or(TangentDirection::horizontal());
  Object o = read_object(ops[0], cfg.trunc);
  Json j;
  j["direction"] = dir.to_string();
  if (auto* phi = std::get_if<FormalDiffeo>(&o)) {
    j["lift"] = print(lift_diffeo(*phi, dir), cfg.trunc);
  } else if (auto* X = std::get_if<FormalVectorField>(&o)) {
    j["lift"] = print(lift_vfield(*X, dir), cfg.trunc);
  } else {
    throw ParseError(Span{}, "expected a diffeomorphism or a vector field, got " + kind_name(o));
  }
  return {j};
}

CommandResult cmd_act(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 2, "act DIFFEO CURVE|SERIES");
  FormalDiffeo phi = read_diffeo(ops[0], cfg.trunc);
  Object o = read_object(ops[1], cfg.trunc);
  Json j;
  if (auto* c = std::get_if<CurveParam>(&o)) {
    j["image"] = print(act(phi, *c), cfg.trunc);
  } else if (auto* f = std::get_if<BiSeries>(&o)) {
    j["pullback"] = print(pullback(*f, phi), cfg.trunc);
  } else {
    throw ParseError(Span{}, "expected a curve or a series, got " + kind_name(o));
  }
  return {j};
}

CommandResult cmd_exp(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "exp VFIELD");
  FormalDiffeo phi = exp_vf(read_vfield(ops[0], cfg.trunc));
  Json j;
  j["diffeo"] = print(phi, cfg.trunc);
  j["class"] = to_string(classify(phi));
  return {j};
}

CommandResult cmd_log(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "log DIFFEO");
  Json j;
  j["vfield"] = print(log_diffeo(read_diffeo(ops[0], cfg.trunc)), cfg.trunc);
  return {j};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

CommandResult cmd_jet_matrix(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "jet-matrix DIFFEO|VFIELD --jet k");
  Object o = read_object(ops[0], cfg.trunc);
  int k = cfg.jet;
  Json j;
  j["k"] = k;
  Json basis = Json::array();
  for (std::size_t c = 0; c < jet_dimension(k); ++c)
    basis.push_back(BiSeries::monomial(Monomial::from_index(c + 1), Scalar(1), k).to_string());
  j["basis"] = basis;
  if (auto* phi = std::get_if<FormalDiffeo>(&o)) {
    j["matrix"] = matrix_json(project_diffeo(*phi, k).matrix());
  } else if (auto* X = std::get_if<FormalVectorField>(&o)) {
    j["matrix"] = matrix_json(project_vfield(*X, k).matrix());
  } else {
    throw ParseError(Span{}, "expected a diffeomorphism or a vector field, got " + kind_name(o));
  }
  return {j};
}

CommandResult cmd_fd_check(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "fd-check GROUP --jet k --ball L");
  GeneratedGroup g = make_group(ops[0], cfg.trunc);
  FdReport r = fd_check(g, cfg.jet, cfg.ball, cfg.caps);
  Json j;
  j["determined"] = r.determined;
  j["k"] = r.k;
  j["L"] = r.radius;
  j["trunc"] = r.trunc;
  j["words"] = r.words;
  j["classes"] = r.classes;
  j["complete"] = r.complete;
  j["counterexample"] = r.counterexample ? word_json(g, *r.counterexample) : Json(nullptr);
  if (!r.complete) j["stoppedBy"] = r.stop_reason;
  // A counterexample settles the question even when the search was cut short.
  return {j, r.determined ? cap_exit(r.complete) : kOk};
}

CommandResult cmd_ui_probe(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 2, "ui-probe GROUP CURVE --ball r");
  GeneratedGroup g = make_group(ops[0], cfg.trunc);
  CurveParam c = read_curve(ops[1], cfg.trunc);
  UiReport r = ui_probe(g, c, cfg.ball, cfg.caps);
  Json j;
  j["radius"] = cfg.ball;
  j["values"] = Json::array();
  for (const auto& e : r.entries) j["values"].push_back(ui_entry(g, e));
  j["max"] = r.max_exact ? ui_entry(g, *r.max_exact) : Json(nullptr);
  j["atLeast"] = Json::array();
  for (const auto& e : r.at_least) j["atLeast"].push_back(ui_entry(g, e));
  j["maxByRadius"] = r.max_exact_by_radius;
  j["stabilized"] = r.stabilized();
  j["heuristic"] = true;
  j["complete"] = r.complete;
  if (!r.complete) j["stoppedBy"] = r.stop_reason;
  return {j, cap_exit(r.complete)};
}

CommandResult cmd_orbit_tree(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 2, "orbit-tree GROUP CURVE --ball r --depth d");
  GeneratedGroup g = make_group(ops[0], cfg.trunc);
  CurveParam c = read_curve(ops[1], cfg.trunc);
  OrbitTreeReport r = orbit_prefix_tree(g, c, cfg.ball, cfg.depth, cfg.caps);
  Json j;
  j["radius"] = cfg.ball;
  j["depth"] = r.depth;
  j["orbitSize"] = r.orbit_size;
  j["nodesPerLevel"] = r.nodes_per_level;
  j["maxBranching"] = r.max_branching;
  j["maxSharedPrefix"] = r.max_shared_prefix;
  j["incomplete"] = r.incomplete;
  j["complete"] = r.complete;
  if (!r.complete) j["stoppedBy"] = r.stop_reason;
  return {j, cap_exit(r.complete)};
}

CommandResult cmd_derived(const std::vector<std::string>& ops, const RunConfig& cfg) {
  need(ops, 1, "derived GROUP --ball r --series n");
  GeneratedGroup g = make_group(ops[0], cfg.trunc);
  SeriesReport d = derived_sample(g, cfg.ball, cfg.series_levels, cfg.sample, cfg.caps);
  SeriesReport c = lower_central_sample(g, cfg.ball, cfg.series_levels, cfg.sample, cfg.caps);
  Json j;
  j["radius"] = cfg.ball;
  j["sample"] = cfg.sample;
  j["derived"] = series_json(g, d);
  j["lowerCentral"] = series_json(g, c);
  bool complete = d.complete && c.complete;
  j["complete"] = complete;
  if (!complete) j["stoppedBy"] = d.complete ? c.stop_reason : d.stop_reason;
  return {j, cap_exit(complete)};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"intersect", cmd_intersect}, {"inp", cmd_inp},       {"blowup", cmd_blowup},
      {"lift", cmd_lift},           {"act", cmd_act},       {"exp", cmd_exp},
      {"log", cmd_log},             {"jet-matrix", cmd_jet_matrix}, {"fd-check", cmd_fd_check},
      {"ui-probe", cmd_ui_probe},   {"orbit-tree", cmd_orbit_tree}, {"derived", cmd_derived},
  };
  return h;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const TruncationError*>(&e)) return "truncation";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  return "error";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"intersect", "inp",        "blowup",   "lift",
                                                 "act",       "exp",        "log",      "jet-matrix",
                                                 "fd-check",  "ui-probe",   "orbit-tree", "derived"};
  return names;
}

CommandResult run_command(const std::string& name, const std::vector<std::string>& operands, const RunConfig& cfg) {
  auto it = handlers().find(name);
  try {
    if (it == handlers().end()) throw ParseError(Span{}, "unknown command '" + name + "'");
    return it->second(operands, cfg);
  } catch (const Error& e) {
    Json j;
    j["error"]["kind"] = error_kind(e);
    j["error"]["message"] = e.what();
    return {j, kDiagnostic};
  }
}

Json to_json(const OrderResult& o) {
  Json j;
  j[o.is_exact() ? "exact" : "atLeast"] = o.value();
  return j;
}

ResourceCaps parse_caps(const std::string& text) {
  ResourceCaps caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(Span{}, "malformed cap '" + item + "'", {"key=value"});
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "words") {
        caps.max_words = std::stoul(val, &used);
      } else if (key == "seconds") {
        caps.max_seconds = std::stod(val, &used);
      } else if (key == "threads") {
        caps.threads = static_cast<unsigned>(std::stoul(val, &used));
      } else {
        throw ParseError(Span{}, "unknown cap '" + key + "'", {"words", "seconds", "threads"});
      }
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::logic_error&) {
      throw ParseError(Span{}, "bad value for cap '" + key + "'");
    }
  }
  return caps;
}

TangentDirection parse_direction(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError(Span{}, "malformed direction '" + text + "'", {"a:b"});
  auto scalar = [](const std::string& s) {
    BiSeries v = read_series(s);
    if (v.max_x_exponent() > 0 || v.max_y_exponent() > 0) throw ParseError(Span{}, "direction entries are scalars");
    return v.coeff(0, 0);
  };
  return TangentDirection::from_vector(scalar(text.substr(0, colon)), scalar(text.substr(colon + 1)));
}

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !(value.size() == 1 && (value.contains("exact") || value.contains("atLeast")))) {
      out << indent << key << '\n';
      render(value, indent + "  ", out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << '\n';
      for (const auto& row : value) {
        std::string line;
        for (const auto& [k, v] : row.items()) line += (line.empty() ? "" : "  ") + k + "=" + scalar_text(v);
        out << indent << "  " << line << '\n';
      }
    } else {
      out << indent << key << "  " << scalar_text(value) << '\n';
    }
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace germs::frontend
