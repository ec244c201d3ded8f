#pragma once

// The flag-incident reduced word: the unique reduced word of w that crosses
// hyperplanes grouped by ascending flag level, where the level of a
// hyperplane is its largest coordinate index.

#include <optional>
#include <vector>

#include "rwgraph/coxeter.hpp"
#include "rwgraph/wordgraph.hpp"

namespace rwg {

struct FlagLevel {
  int level;
  std::vector<Hyperplane> members;
};

// Largest coordinate index of a hyperplane (x_i = x_j with i < j has level j).
int flag_level(const Hyperplane& h);

// Nonempty levels in ascending order; they partition the hyperplanes.
std::vector<FlagLevel> flag_levels(const GroupSpec& spec);

// Type A: (1)(2,1)(3,2,1)...; type B: (0)(1,0,1)(2,1,0,1,2)...
Word canonical_word_w0(const GroupSpec& spec);

// Built by deleting the entry of largest absolute value and appending the
// suffix that routes it into place. Postconditions (reduced, product w,
// flag-incident) are checked; if the suffix rule fails them, the greedy walk
// result is returned instead, and if that fails too InvariantViolation is thrown.
Word canonical_word(const Element& w);

// Gallery walk from the identity: always cross the unique wall of the current
// chamber that lies in the lowest unfinished level of inversion_set(w).
// Throws InvariantViolation if the choice is ever not unique.
Word canonical_word_greedy(const Element& w);

// Crossing levels are weakly increasing.
bool verify_flag_incidence(const Word& r);

struct CertificationReport {
  Element element;
  Word canonical;
  bool accessible = false;
  std::optional<AccessibilityWitness> witness;
  int l2_size = 0;  // |L2(w)|
  int eccentricity = 0;
  // Only meaningful for w0: eccentricity == |L2|.
  std::optional<bool> eccentricity_matches_l2;
  std::size_t word_count = 0;

  bool pass() const { return accessible && eccentricity_matches_l2.value_or(true); }
};

CertificationReport certify_accessibility(const Element& w, const BuildOptions& options = {});
CertificationReport certify_accessibility(const WordGraph& g);

}  // namespace rwg
