#include "rwgraph/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>

#include "rwgraph/errors.hpp"

namespace rwg {

int flag_level(const Hyperplane& h) { return std::max(h.i, h.j); }

std::vector<FlagLevel> flag_levels(const GroupSpec& spec) {
  const auto& arr = arrangement_for(spec);
  std::vector<FlagLevel> out;
  for (int level = 1; level <= spec.n(); ++level) {
    FlagLevel fl{level, {}};
    for (int h = 0; h < arr.hyperplane_count(); ++h) {
      if (flag_level(arr.hyperplane(h)) == level) fl.members.push_back(arr.hyperplane(h));
    }
    if (!fl.members.empty()) out.push_back(std::move(fl));
  }
  return out;
}

Word canonical_word_w0(const GroupSpec& spec) {
  std::vector<int> letters;
  if (spec.family() == Family::A) {
    for (int top = 1; top < spec.n(); ++top)
      for (int g = top; g >= 1; --g) letters.push_back(g);
  } else {
    for (int top = 0; top < spec.n(); ++top) {
      for (int g = top; g >= 1; --g) letters.push_back(g);
      letters.push_back(0);
      for (int g = 1; g <= top; ++g) letters.push_back(g);
    }
  }
  return Word(spec, letters);
}

namespace {

// Letters of the canonical word of the signed permutation `images`
// (entries with absolute values 1..images.size()).
void suffix_rule(std::vector<int> images, Family family, std::vector<int>& out) {
  const int n = static_cast<int>(images.size());
  if (n <= 1 && family == Family::A) return;
  if (n == 0) return;
  auto it = std::find_if(images.begin(), images.end(), [n](int v) { return std::abs(v) == n; });
  const int p = static_cast<int>(it - images.begin()) + 1;
  const bool negative = *it < 0;
  images.erase(it);
  suffix_rule(images, family, out);
  if (!negative) {
    for (int g = n - 1; g >= p; --g) out.push_back(g);
  } else {
    for (int g = n - 1; g >= 1; --g) out.push_back(g);
    out.push_back(0);
    for (int g = 1; g <= p - 1; ++g) out.push_back(g);
  }
}

bool postconditions_hold(const Word& r, const Element& w) {
  return is_reduced(r) && evaluate(r) == w && verify_flag_incidence(r);
}

}  // namespace

Word canonical_word_greedy(const Element& w) {
  const auto& spec = w.spec();
  auto target = inversion_set(w);
  std::set<Hyperplane> remaining(target.begin(), target.end());
  Element u = Element::identity(spec);
  std::vector<int> letters;
  while (!remaining.empty()) {
    int level = spec.n() + 1;
    for (const auto& h : remaining) level = std::min(level, flag_level(h));
    std::optional<int> choice;
    for (int g = spec.min_generator(); g <= spec.max_generator(); ++g) {
      auto h = wall(u, g);
      if (flag_level(h) != level || !remaining.count(h)) continue;
      if (choice) {
        throw InvariantViolation("greedy gallery walk for " + w.to_string() + " has two walls at level " +
                                 std::to_string(level));
      }
      choice = g;
    }
    if (!choice) {
      throw InvariantViolation("greedy gallery walk for " + w.to_string() + " is stuck at level " +
                               std::to_string(level) + " in chamber " + u.to_string());
    }
    remaining.erase(wall(u, *choice));
    letters.push_back(*choice);
    u = u.times_generator(*choice);
  }
  Word r(spec, letters);
  if (!(u == w)) throw InvariantViolation("greedy gallery walk for " + w.to_string() + " ended at " + u.to_string());
  return r;
}

Word canonical_word(const Element& w) {
  std::vector<int> letters;
  suffix_rule(std::vector<int>(w.images().begin(), w.images().end()), w.spec().family(), letters);
  Word r(w.spec(), letters);
  if (postconditions_hold(r, w)) return r;
  Word greedy = canonical_word_greedy(w);
  if (!postconditions_hold(greedy, w)) {
    throw InvariantViolation("no flag-incident reduced word constructed for " + w.to_string());
  }
  std::cerr << "warning: suffix rule gave " << r.to_string() << " for " << w.to_string()
            << "; using gallery walk result " << greedy.to_string() << "\n";
  return greedy;
}

bool verify_flag_incidence(const Word& r) {
  auto seq = crossing_sequence(r);
  int last = 0;
  for (const auto& h : seq.crossings) {
    int level = flag_level(h);
    if (level < last) return false;
    last = level;
  }
  return true;
}

CertificationReport certify_accessibility(const WordGraph& g) {
  const auto& w = g.element();
  CertificationReport report{w, canonical_word(w)};
  auto result = is_accessible(g, report.canonical);
  report.accessible = result.accessible;
  report.witness = result.witness;
  report.eccentricity = result.eccentricity;
  report.l2_size = g.l2().count();
  report.word_count = g.vertex_count();
  if (w.is_longest()) report.eccentricity_matches_l2 = report.eccentricity == report.l2_size;
  return report;
}

CertificationReport certify_accessibility(const Element& w, const BuildOptions& options) {
  return certify_accessibility(build_graph(w, options));
}

}  // namespace rwg
