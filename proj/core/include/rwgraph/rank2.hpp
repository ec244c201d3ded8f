#pragma once

// Rank-two flats of the type A/B reflection arrangements and the separation
// sets they induce on reduced words.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rwgraph/coxeter.hpp"
#include "rwgraph/flat_set.hpp"

namespace rwg {

// A maximal set of hyperplanes through a common codimension-two subspace.
struct Rank2Flat {
  GroupSpec spec;
  std::vector<Hyperplane> members;  // sorted, at least two

  // Type A: "X_{123}" or "X_{12,34}". Type B: the first two member equations,
  // e.g. "{x1=0,x2=0}" or "{x1=0,x2=-x3}".
  std::string name() const;

  friend bool operator==(const Rank2Flat&, const Rank2Flat&) = default;
  friend auto operator<=>(const Rank2Flat& a, const Rank2Flat& b) {
    if (auto c = a.spec <=> b.spec; c != 0) return c;
    return a.members <=> b.members;
  }
};

// Hyperplanes and rank-two flats of one group, with dense indexing.
// Built once per spec and shared read-only (see arrangement_for).
class Arrangement {
 public:
  explicit Arrangement(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }

  int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }
  const Hyperplane& hyperplane(int h) const { return hyperplanes_[static_cast<std::size_t>(h)]; }
  int index_of(const Hyperplane& h) const;

  int flat_count() const { return static_cast<int>(flats_.size()); }
  // Member hyperplane indices of flat f, ascending.
  const std::vector<int>& flat_members(int f) const { return flats_[static_cast<std::size_t>(f)]; }
  Rank2Flat flat(int f) const;
  int index_of(const Rank2Flat& flat) const;

  // The unique flat containing two distinct hyperplanes.
  int flat_of_pair(int h1, int h2) const {
    return pair_flat_[static_cast<std::size_t>(h1) * hyperplanes_.size() + static_cast<std::size_t>(h2)];
  }

  FlatSet empty_set() const { return FlatSet(flat_count()); }

 private:
  GroupSpec spec_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> lookup_;  // (kind, i, j) -> hyperplane index
  std::vector<std::vector<int>> flats_;
  std::vector<int> pair_flat_;
};

const Arrangement& arrangement_for(const GroupSpec& spec);

struct InducedOrder {
  Rank2Flat flat;
  std::vector<Hyperplane> order;
};

// Flats on which two words' induced crossing orders differ.
struct SeparationSet {
  GroupSpec spec;
  FlatSet flats;

  int size() const { return flats.count(); }
  bool contains(const Rank2Flat& flat) const;
  std::vector<Rank2Flat> to_flats() const;

  friend bool operator==(const SeparationSet&, const SeparationSet&) = default;
};

std::vector<Rank2Flat> enumerate_flats(const GroupSpec& spec);

// Flats all of whose members are inverted by w.
std::vector<Rank2Flat> l2_of(const Element& w);
FlatSet l2_flat_set(const Element& w);

// Throws DomainError if r is not reduced or X is not in L2(evaluate(r)).
InducedOrder induced_order(const Word& r, const Rank2Flat& flat);

// Reference implementation: compares the full induced orders of every flat
// in L2(w). Throws DomainError if the words have different products.
SeparationSet separation(const Word& r, const Word& r2);

// Fast route for inner loops. Each flat of L2(w) has exactly two possible
// induced orders, so one bit per flat (are its two smallest members crossed
// in descending order?) determines the order, and separation(r, r') is the
// xor of the two signatures.
class OrientationTable {
 public:
  explicit OrientationTable(const Element& w);

  const Element& element() const { return element_; }
  const FlatSet& l2() const { return l2_; }

  // Throws DomainError if r is not a reduced word of the table's element.
  FlatSet signature(const Word& r) const;
  // Same, from a precomputed crossing sequence given as hyperplane indices.
  FlatSet signature_from_crossings(const std::vector<int>& crossings) const;

 private:
  Element element_;
  const Arrangement* arrangement_;
  FlatSet l2_;
  std::vector<int> probe_flats_;            // flats of L2(w)
  std::vector<std::pair<int, int>> probes_;  // their two smallest members
};

struct MetricViolation {
  std::string property;
  std::vector<Word> words;
};

struct MetricReport {
  bool pass = true;
  std::uint64_t checks = 0;
  bool exhaustive = true;
  std::vector<MetricViolation> violations;  // first few only
  std::uint64_t violation_count = 0;
};

struct MetricOptions {
  std::size_t exhaustive_threshold = 200;
  std::uint64_t sampled_triples = 20000;
  std::uint64_t seed = 0;
  std::size_t max_reported = 10;
};

using SeparationFn = std::function<SeparationSet(const Word&, const Word&)>;

// Checks, for words of one element: separation(x,x) empty, symmetry, the
// symmetric-difference identity on triples (all triples up to the exhaustive
// threshold, sampled beyond), |separation| == 1 iff one braid move apart, and
// injectivity of r -> separation(words[0], r).
MetricReport verify_metric_axioms(const std::vector<Word>& words, const MetricOptions& options = {},
                                  const SeparationFn& separation_fn = {});

}  // namespace rwg
