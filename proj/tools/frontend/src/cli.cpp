#include "germs/frontend/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "germs/frontend/commands.hpp"
#include "germs/frontend/parser.hpp"

namespace germs::frontend {

namespace {

struct Options {
  RunConfig cfg;
  std::string caps;
  std::string dir;
  bool table = false;
  std::vector<std::string> operands;
  std::string batch_file;
};

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d = {
      {"intersect", "intersection multiplicity of two curves"},
      {"inp", "infinitely near points and multiplicity sequence of a curve"},
      {"blowup", "one blow-up step: point on the exceptional line and strict transform"},
      {"lift", "lift a diffeomorphism or vector field to a point of the exceptional line"},
      {"act", "image of a curve (or pullback of a series) under a diffeomorphism"},
      {"exp", "time-one map of a nilpotent vector field"},
      {"log", "infinitesimal generator of a unipotent diffeomorphism"},
      {"jet-matrix", "matrix of the k-jet action on m/m^(k+1)"},
      {"fd-check", "search a ball of a group for non-trivial elements with trivial k-jet"},
      {"ui-probe", "intersection numbers between a curve and its images under a ball"},
      {"orbit-tree", "prefix tree of infinitely near points over an orbit sample"},
      {"derived", "derived and lower central series samples"},
  };
  return d;
}

void add_options(CLI::App& sub, Options& o) {
  sub.add_option("--trunc", o.cfg.trunc, "working truncation order")->check(CLI::NonNegativeNumber);
  sub.add_option("--depth", o.cfg.depth, "blow-up depth")->check(CLI::PositiveNumber);
  sub.add_option("--ball", o.cfg.ball, "ball radius (word length)")->check(CLI::NonNegativeNumber);
  sub.add_option("--jet", o.cfg.jet, "jet order k")->check(CLI::PositiveNumber);
  sub.add_option("--method", o.cfg.method, "intersection method")
      ->check(CLI::IsMember({"order", "noether", "both"}));
  sub.add_option("--caps", o.caps, "resource caps: words=N,seconds=S[,threads=T]");
  sub.add_option("--series", o.cfg.series_levels, "number of series levels")->check(CLI::PositiveNumber);
  sub.add_option("--sample", o.cfg.sample, "sample size per series level");
  sub.add_option("--dir", o.dir, "tangent direction a:b");
  sub.add_flag("--table", o.table, "human-readable output");
}

std::unique_ptr<CLI::App> make_app(Options& o) {
  auto app = std::make_unique<CLI::App>("Formal germs of plane curves and diffeomorphisms", "germs");
  app->require_subcommand(1);
  for (const auto& name : command_names()) {
    CLI::App* sub = app->add_subcommand(name, descriptions().at(name));
    sub->add_option("operands", o.operands, "objects in the text syntax")->required();
    add_options(*sub, o);
  }
  CLI::App* batch = app->add_subcommand("batch", "run one command per line of a file");
  batch->add_option("file", o.batch_file, "command file")->required()->check(CLI::ExistingFile);
  return app;
}

void emit(const Json& j, bool table, std::ostream& out) {
  if (table) {
    out << render_table(j);
  } else {
    out << j.dump() << '\n';
  }
}

int run_batch(const std::string& file, std::ostream& out, std::ostream& err);

int execute(const std::function<void(CLI::App&)>& parse, bool allow_batch, std::ostream& out, std::ostream& err) {
  Options o;
  auto app = make_app(o);
  try {
    parse(*app);
  } catch (const CLI::ParseError& e) {
    int code = app->exit(e, out, err);
    return code == 0 ? kOk : kDiagnostic;
  }
  const std::string name = app->get_subcommands().front()->get_name();
  if (name == "batch") {
    if (!allow_batch) {
      err << "batch files cannot be nested\n";
      return kDiagnostic;
    }
    return run_batch(o.batch_file, out, err);
  }
  try {
    if (!o.caps.empty()) o.cfg.caps = parse_caps(o.caps);
    if (!o.dir.empty()) o.cfg.dir = parse_direction(o.dir);
  } catch (const Error& e) {
    Json j;
    j["error"]["kind"] = "parse";
    j["error"]["message"] = e.what();
    emit(j, o.table, out);
    return kDiagnostic;
  }
  CommandResult r = run_command(name, o.operands, o.cfg);
  emit(r.output, o.table, out);
  return r.exit_code;
}

int run_batch(const std::string& file, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) {
    err << "cannot open " << file << '\n';
    return kDiagnostic;
  }
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    int code = execute([&](CLI::App& app) { app.parse(line, false); }, false, out, err);
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  std::reverse(args.begin(), args.end());
  return execute([&](CLI::App& app) { app.parse(args); }, true, out, err);
}

}  // namespace germs::frontend
