#pragma once

// Finitely generated subgroups of formal diffeomorphisms: ball enumeration
// and the experiments run on it.
//
// A word is read as map composition, left to right: the word "a*b" is the
// diffeomorphism a o b. Enumeration extends words on the right and visits
// each layer in shortlex order (g0, g0^-1, g1, g1^-1, ...).

#include <optional>
#include <string>
#include <vector>

#include "germs/curve.hpp"
#include "germs/diffeo.hpp"

namespace germs {

struct Letter {
  int gen = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

class GeneratedGroup {
 public:
  /// Generators are brought to a common truncation. Throws PreconditionError
  /// when names and generators differ in number or there are none.
  GeneratedGroup(std::vector<std::string> names, std::vector<FormalDiffeo> gens);

  std::size_t rank() const { return gens_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const FormalDiffeo& value(const Letter& l) const;
  int trunc() const { return trunc_; }

  FormalDiffeo evaluate(const Word& w) const;
  /// "a*b^-1", "id" for the empty word.
  std::string format(const Word& w) const;
  /// Letters in shortlex order.
  std::vector<Letter> alphabet() const;

 private:
  std::vector<std::string> names_;
  std::vector<FormalDiffeo> gens_;
  std::vector<FormalDiffeo> invs_;
  int trunc_;
};

/// Limits shared by every enumeration. A limit of 0 means unbounded.
struct ResourceCaps {
  std::size_t max_words = 200000;
  double max_seconds = 60.0;
  unsigned threads = 1;
};

struct BallElement {
  Word word;  // shortlex-least word reaching the element
  FormalDiffeo value;
};

/// Elements sharing one k-jet; the witness is the shortlex-least word.
struct JetClass {
  Word witness;
  std::size_t members = 0;
};

struct BallReport {
  int radius = 0;
  int k = 1;
  /// Distinct elements (equality at working truncation), identity first.
  /// Only one representative per element is extended, which reaches the
  /// same set as evaluating every reduced word.
  std::vector<BallElement> elements;
  /// Distinct k-jets in order of first appearance; the identity class first.
  std::vector<JetClass> classes;
  /// elements.size() after each completed layer.
  std::vector<std::size_t> sphere_ends;
  std::size_t words_evaluated = 0;
  bool complete = true;
  std::string stop_reason;  // "", "words", "seconds"
};

BallReport enumerate_ball(const GeneratedGroup& g, int radius, int k, const ResourceCaps& caps);

/// Inverse word and free reduction.
Word inverse(const Word& w);
Word reduce(Word w);
/// Subgroup generated by sampled elements, named prefix1, prefix2, ...
GeneratedGroup subgroup(const std::vector<BallElement>& elems, const std::string& prefix);

struct FdReport {
  int k = 0;
  int radius = 0;
  int trunc = 0;
  /// No non-identity element of the explored ball has identity k-jet.
  bool determined = true;
  std::size_t words = 0;
  std::size_t classes = 0;  // distinct k-jets in the ball
  bool complete = true;
  std::string stop_reason;
  std::optional<Word> counterexample;
};

/// Searches the ball of the given radius for g != id with j^k g = id.
FdReport fd_check(const GeneratedGroup& g, int k, int radius, const ResourceCaps& caps);

struct UiEntry {
  Word word;
  OrderResult value = OrderResult::exact(0);
};

struct UiReport {
  std::vector<UiEntry> entries;  // non-identity elements, enumeration order
  std::optional<UiEntry> max_exact;
  /// Elements with g(gamma) = gamma up to truncation.
  std::vector<UiEntry> at_least;
  /// Running maximum of the Exact values over words of length <= r; -1 if none.
  std::vector<int> max_exact_by_radius;
  bool complete = true;
  std::string stop_reason;
  /// Heuristic: the running maximum did not change over the last layer.
  bool stabilized() const;
};

/// (g(gamma), gamma)_0 for g in the ball, gamma implicitized once.
UiReport ui_probe(const GeneratedGroup& g, const CurveParam& gamma, int radius, const ResourceCaps& caps);

struct OrbitTreeReport {
  int depth = 0;
  std::size_t orbit_size = 0;  // distinct images g(gamma)
  std::vector<std::size_t> nodes_per_level;  // level 1..depth
  /// Largest number of children of a node at each level 0..depth-1.
  std::vector<std::size_t> max_branching;
  int max_shared_prefix = 0;  // over pairs of distinct images
  std::size_t incomplete = 0;  // images whose sequence stopped before depth
  bool complete = true;
  std::string stop_reason;
};

OrbitTreeReport orbit_prefix_tree(const GeneratedGroup& g, const CurveParam& gamma, int radius, int depth,
                                  const ResourceCaps& caps);

struct CommutatorLevel {
  std::size_t size = 0;  // distinct elements in the sample
  std::size_t identity = 0;
  std::size_t tangent_to_identity = 0;
  std::size_t unipotent = 0;
  std::size_t general = 0;
  /// Lowest degree at which a non-identity element differs from the
  /// identity; -1 when every element is the identity.
  int min_contact = -1;
  bool capped = false;  // sample hit the size cap
};

struct SeriesReport {
  std::vector<CommutatorLevel> levels;
  /// Non-identity sampled elements of each level, with their words.
  std::vector<std::vector<BallElement>> samples;
  bool complete = true;
  std::string stop_reason;
  /// Last computed level consists of the identity only.
  bool terminates() const;
};

/// Derived series sample: level 1 is commutators of ball pairs, level j+1
/// commutators of level-j pairs. Each level keeps at most `sample` elements.
SeriesReport derived_sample(const GeneratedGroup& g, int radius, int levels, std::size_t sample,
                            const ResourceCaps& caps);
/// Lower central series sample: C^1 = [B, B], C^(j+1) = [B, C^j].
SeriesReport lower_central_sample(const GeneratedGroup& g, int radius, int levels, std::size_t sample,
                                  const ResourceCaps& caps);

}  // namespace germs
