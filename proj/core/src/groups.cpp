#include "germs/groups.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "germs/blowup.hpp"
#include "germs/error.hpp"

namespace germs {

GeneratedGroup::GeneratedGroup(std::vector<std::string> names, std::vector<FormalDiffeo> gens)
    : names_(std::move(names)) {
  if (gens.empty()) throw PreconditionError("group needs at least one generator");
  if (names_.size() != gens.size()) throw PreconditionError("one name per generator");
  trunc_ = gens.front().trunc();
  for (const auto& g : gens) trunc_ = std::min(trunc_, g.trunc());
  for (auto& g : gens) {
    gens_.push_back(g.truncated(trunc_));
    invs_.push_back(invert(gens_.back()));
  }
}

const FormalDiffeo& GeneratedGroup::value(const Letter& l) const {
  auto i = static_cast<std::size_t>(l.gen);
  return l.inverse ? invs_.at(i) : gens_.at(i);
}

FormalDiffeo GeneratedGroup::evaluate(const Word& w) const {
  FormalDiffeo r = FormalDiffeo::identity(trunc_);
  for (const auto& l : w) r = compose(r, value(l));
  return r;
}

std::string GeneratedGroup::format(const Word& w) const {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += '*';
    s += names_.at(static_cast<std::size_t>(l.gen));
    if (l.inverse) s += "^-1";
  }
  return s;
}

std::vector<Letter> GeneratedGroup::alphabet() const {
  std::vector<Letter> a;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    a.push_back({static_cast<int>(i), false});
    a.push_back({static_cast<int>(i), true});
  }
  return a;
}

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, !it->inverse});
  return r;
}

Word reduce(Word w) {
  Word r;
  for (const auto& l : w) {
    if (!r.empty() && r.back().gen == l.gen && r.back().inverse != l.inverse) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

GeneratedGroup subgroup(const std::vector<BallElement>& elems, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<FormalDiffeo> gens;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(prefix + std::to_string(i + 1));
    gens.push_back(elems[i].value);
  }
  return {std::move(names), std::move(gens)};
}

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const ResourceCaps& caps) : caps_(caps), start_(Clock::now()) {}
  bool out_of_time() const {
    if (caps_.max_seconds <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - start_).count() > caps_.max_seconds;
  }
  /// How many of `wanted` further evaluations fit under the word cap.
  std::size_t words_left(std::size_t used, std::size_t wanted) const {
    if (caps_.max_words == 0) return wanted;
    return used >= caps_.max_words ? 0 : std::min(wanted, caps_.max_words - used);
  }

 private:
  ResourceCaps caps_;
  Clock::time_point start_;
};

std::string key_of(const FormalDiffeo& f) { return f.x().to_string() + "|" + f.y().to_string(); }

bool cancels(const Word& w, const Letter& l) {
  return !w.empty() && w.back().gen == l.gen && w.back().inverse != l.inverse;
}

// Runs job(i) for i in [0, n) on up to `threads` workers and returns the
// length of the prefix that completed before the deadline.
template <class Job>
std::size_t run_prefix(std::size_t n, unsigned threads, const Budget& budget, Job job) {
  std::vector<char> done(n, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      if (budget.out_of_time()) {
        stop.store(true);
        return;
      }
      job(i);
      done[i] = 1;
    }
  };
  unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::size_t prefix = 0;
  while (prefix < n && done[prefix]) ++prefix;
  return prefix;
}

std::size_t layer_of(const BallReport& ball, std::size_t idx) {
  std::size_t layer = 0;
  while (layer < ball.sphere_ends.size() && idx >= ball.sphere_ends[layer]) ++layer;
  return layer;
}

bool jet_is_identity(const FormalDiffeo& f, int k) {
  int n = f.trunc();
  BiSeries dx = f.x() - BiSeries::x(n), dy = f.y() - BiSeries::y(n);
  return dx.order_bound() > k && dy.order_bound() > k;
}

int contact_order(const FormalDiffeo& f) {
  int n = f.trunc();
  OrderResult o = min_order((f.x() - BiSeries::x(n)).order(), (f.y() - BiSeries::y(n)).order());
  return o.is_exact() ? o.value() : -1;
}

}  // namespace

BallReport enumerate_ball(const GeneratedGroup& g, int radius, int k, const ResourceCaps& caps) {
  if (radius < 0) throw PreconditionError("radius must be non-negative");
  if (k < 1) throw PreconditionError("jet order must be at least 1");
  if (k > g.trunc()) throw TruncationError("insufficient truncation");
  Budget budget(caps);
  BallReport r;
  r.radius = radius;
  r.k = k;
  r.elements.push_back({Word{}, FormalDiffeo::identity(g.trunc())});
  r.sphere_ends.push_back(1);
  std::unordered_set<std::string> seen{key_of(r.elements.front().value)};
  std::unordered_map<std::string, std::size_t> class_of;
  auto classify_jet = [&](const BallElement& e) {
    auto [it, fresh] = class_of.emplace(key_of(e.value.jet(k)), r.classes.size());
    if (fresh) r.classes.push_back({e.word, 0});
    ++r.classes[it->second].members;
  };
  classify_jet(r.elements.front());
  const auto letters = g.alphabet();

  std::size_t layer_start = 0, layer_end = 1;
  for (int len = 1; len <= radius && layer_start < layer_end; ++len) {
    std::vector<std::pair<std::size_t, Letter>> cands;
    for (std::size_t p = layer_start; p < layer_end; ++p)
      for (const auto& l : letters)
        if (!cancels(r.elements[p].word, l)) cands.emplace_back(p, l);

    std::size_t allowed = budget.words_left(r.words_evaluated, cands.size());
    if (allowed < cands.size()) {
      cands.resize(allowed);
      r.complete = false;
      r.stop_reason = "words";
    }
    std::vector<std::optional<FormalDiffeo>> values(cands.size());
    std::size_t done = run_prefix(cands.size(), caps.threads, budget, [&](std::size_t i) {
      values[i] = compose(r.elements[cands[i].first].value, g.value(cands[i].second));
    });
    if (done < cands.size()) {
      r.complete = false;
      r.stop_reason = "seconds";
    }
    r.words_evaluated += done;
    for (std::size_t i = 0; i < done; ++i) {
      if (!seen.insert(key_of(*values[i])).second) continue;
      Word w = r.elements[cands[i].first].word;
      w.push_back(cands[i].second);
      r.elements.push_back({std::move(w), std::move(*values[i])});
      classify_jet(r.elements.back());
    }
    r.sphere_ends.push_back(r.elements.size());
    if (!r.complete) break;
    layer_start = layer_end;
    layer_end = r.elements.size();
  }
  return r;
}

FdReport fd_check(const GeneratedGroup& g, int k, int radius, const ResourceCaps& caps) {
  BallReport ball = enumerate_ball(g, radius, k, caps);
  FdReport r;
  r.k = k;
  r.radius = radius;
  r.trunc = g.trunc();
  r.words = ball.words_evaluated;
  r.classes = ball.classes.size();
  r.complete = ball.complete;
  r.stop_reason = ball.stop_reason;
  for (std::size_t i = 1; i < ball.elements.size(); ++i) {
    if (jet_is_identity(ball.elements[i].value, k)) {
      r.determined = false;
      r.counterexample = ball.elements[i].word;
      break;
    }
  }
  return r;
}

bool UiReport::stabilized() const {
  std::size_t n = max_exact_by_radius.size();
  return n >= 2 && max_exact_by_radius[n - 1] == max_exact_by_radius[n - 2];
}

UiReport ui_probe(const GeneratedGroup& g, const CurveParam& gamma, int radius, const ResourceCaps& caps) {
  Budget budget(caps);
  BallReport ball = enumerate_ball(g, radius, 1, caps);
  BiSeries f = implicitize(gamma, gamma.trunc());

  UiReport r;
  r.complete = ball.complete;
  r.stop_reason = ball.stop_reason;
  std::size_t n = ball.elements.size();
  std::vector<std::optional<OrderResult>> vals(n);
  std::size_t done = run_prefix(n, caps.threads, budget, [&](std::size_t i) {
    if (i == 0) return;
    CurveParam image = act(ball.elements[i].value, gamma);
    vals[i] = substitute(f, image.x(), image.y()).order();
  });
  if (done < n) {
    r.complete = false;
    r.stop_reason = "seconds";
  }

  std::size_t layers = ball.sphere_ends.size();
  r.max_exact_by_radius.assign(layers, -1);
  for (std::size_t i = 1; i < done; ++i) {
    UiEntry e{ball.elements[i].word, *vals[i]};
    if (e.value.is_exact()) {
      if (!r.max_exact || e.value.value() > r.max_exact->value.value()) r.max_exact = e;
      std::size_t layer = layer_of(ball, i);
      for (std::size_t l = layer; l < layers; ++l)
        r.max_exact_by_radius[l] = std::max(r.max_exact_by_radius[l], e.value.value());
    } else {
      r.at_least.push_back(e);
    }
    r.entries.push_back(std::move(e));
  }
  if (done < n) r.max_exact_by_radius.resize(layer_of(ball, done));
  return r;
}

OrbitTreeReport orbit_prefix_tree(const GeneratedGroup& g, const CurveParam& gamma, int radius, int depth,
                                  const ResourceCaps& caps) {
  if (depth < 1) throw PreconditionError("depth must be at least 1");
  Budget budget(caps);
  BallReport ball = enumerate_ball(g, radius, 1, caps);
  OrbitTreeReport r;
  r.depth = depth;
  r.complete = ball.complete;
  r.stop_reason = ball.stop_reason;

  std::size_t n = ball.elements.size();
  std::vector<std::optional<CurveParam>> images(n);
  std::vector<std::optional<NearPointSeq>> seqs(n);
  std::size_t done = run_prefix(n, caps.threads, budget, [&](std::size_t i) {
    images[i] = act(ball.elements[i].value, gamma);
    seqs[i] = near_points_partial(*images[i], depth);
  });
  if (done < n) {
    r.complete = false;
    r.stop_reason = "seconds";
  }

  struct Node {
    std::map<std::string, std::size_t> children;
    std::size_t count = 0;
    int level = 0;
  };
  std::vector<Node> trie(1);
  std::unordered_set<std::string> distinct;
  for (std::size_t i = 0; i < done; ++i) {
    if (!distinct.insert(images[i]->to_string()).second) continue;
    const NearPointSeq& seq = *seqs[i];
    if (static_cast<int>(seq.depth()) < depth) ++r.incomplete;
    std::size_t node = 0;
    ++trie[0].count;
    for (const auto& p : seq.points) {
      std::string key = p.to_string();
      auto it = trie[node].children.find(key);
      std::size_t child;
      if (it == trie[node].children.end()) {
        child = trie.size();
        trie[node].children.emplace(key, child);
        trie.push_back(Node{{}, 0, trie[node].level + 1});
      } else {
        child = it->second;
      }
      node = child;
      ++trie[node].count;
    }
  }
  r.orbit_size = distinct.size();
  r.nodes_per_level.assign(static_cast<std::size_t>(depth), 0);
  r.max_branching.assign(static_cast<std::size_t>(depth), 0);
  for (const auto& node : trie) {
    if (node.level > 0) ++r.nodes_per_level[static_cast<std::size_t>(node.level - 1)];
    if (node.level < depth) {
      auto& b = r.max_branching[static_cast<std::size_t>(node.level)];
      b = std::max(b, node.children.size());
    }
    if (node.count >= 2) r.max_shared_prefix = std::max(r.max_shared_prefix, node.level);
  }
  return r;
}

bool SeriesReport::terminates() const { return !levels.empty() && levels.back().size == levels.back().identity; }

namespace {

struct Sample {
  std::vector<BallElement> elements;  // non-identity
  CommutatorLevel summary;
};

class SampleBuilder {
 public:
  explicit SampleBuilder(std::size_t cap) : cap_(cap) {}
  bool full() const { return cap_ != 0 && seen_.size() >= cap_; }
  void add(BallElement e) {
    if (!seen_.insert(key_of(e.value)).second) return;
    CommutatorLevel& s = out_.summary;
    ++s.size;
    if (e.value.is_identity()) {
      ++s.identity;
      return;
    }
    switch (classify(e.value)) {
      case DiffeoClass::tangent_to_identity: ++s.tangent_to_identity; break;
      case DiffeoClass::unipotent: ++s.unipotent; break;
      case DiffeoClass::general: ++s.general; break;
    }
    int c = contact_order(e.value);
    if (c >= 0 && (s.min_contact < 0 || c < s.min_contact)) s.min_contact = c;
    out_.elements.push_back(std::move(e));
  }
  Sample finish(bool capped) {
    out_.summary.capped = capped;
    return std::move(out_);
  }

 private:
  std::size_t cap_;
  std::unordered_set<std::string> seen_;
  Sample out_;
};

BallElement bracket_of(const BallElement& a, const BallElement& b) {
  Word w = a.word;
  for (const Word& part : {b.word, inverse(a.word), inverse(b.word)}) w.insert(w.end(), part.begin(), part.end());
  return {reduce(std::move(w)), commutator(a.value, b.value)};
}

// Commutators [a_i, b_j] over index pairs in a fixed order, stopping at the
// sample cap, the word cap or the deadline.
Sample commutator_level(const std::vector<BallElement>& as, const std::vector<BallElement>& bs, bool same,
                        std::size_t cap, const Budget& budget, std::size_t& used, SeriesReport& report) {
  SampleBuilder builder(cap);
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = same ? i + 1 : 0; j < bs.size(); ++j) {
      if (builder.full()) return builder.finish(true);
      if (budget.words_left(used, 1) == 0 || budget.out_of_time()) {
        report.complete = false;
        report.stop_reason = budget.out_of_time() ? "seconds" : "words";
        return builder.finish(false);
      }
      ++used;
      builder.add(bracket_of(as[i], bs[j]));
    }
  }
  return builder.finish(false);
}

std::vector<BallElement> ball_sample(const BallReport& ball, std::size_t cap) {
  std::vector<BallElement> out;
  for (std::size_t i = 1; i < ball.elements.size() && (cap == 0 || out.size() < cap); ++i)
    out.push_back(ball.elements[i]);
  return out;
}

template <class Next>
SeriesReport sample_series(const GeneratedGroup& g, int radius, int levels, std::size_t sample,
                           const ResourceCaps& caps, Next next) {
  if (levels < 1) throw PreconditionError("at least one level required");
  Budget budget(caps);
  BallReport ball = enumerate_ball(g, radius, 1, caps);
  SeriesReport r;
  r.complete = ball.complete;
  r.stop_reason = ball.stop_reason;
  std::vector<BallElement> base = ball_sample(ball, sample);
  std::size_t used = ball.words_evaluated;
  Sample cur = commutator_level(base, base, true, sample, budget, used, r);
  r.levels.push_back(cur.summary);
  r.samples.push_back(cur.elements);
  for (int l = 2; l <= levels && r.complete && !cur.elements.empty(); ++l) {
    cur = next(base, cur.elements, budget, used, r);
    r.levels.push_back(cur.summary);
    r.samples.push_back(cur.elements);
  }
  return r;
}

}  // namespace

SeriesReport derived_sample(const GeneratedGroup& g, int radius, int levels, std::size_t sample,
                            const ResourceCaps& caps) {
  return sample_series(g, radius, levels, sample, caps,
                       [&](const std::vector<BallElement>&, const std::vector<BallElement>& prev,
                           const Budget& budget, std::size_t& used, SeriesReport& r) {
                         return commutator_level(prev, prev, true, sample, budget, used, r);
                       });
}

SeriesReport lower_central_sample(const GeneratedGroup& g, int radius, int levels, std::size_t sample,
                                  const ResourceCaps& caps) {
  return sample_series(g, radius, levels, sample, caps,
                       [&](const std::vector<BallElement>& base, const std::vector<BallElement>& prev,
                           const Budget& budget, std::size_t& used, SeriesReport& r) {
                         return commutator_level(base, prev, false, sample, budget, used, r);
                       });
}

}  // namespace germs
