#pragma once

// Elements, words and hyperplanes of the finite Coxeter groups of type A and B.
//
// Type A(n) is the symmetric group on n letters with generators s_1..s_{n-1};
// type B(n) is the group of signed permutations with generators s_0..s_{n-1}.
// Elements are stored in one-line notation and words act by right
// multiplication: appending s_i swaps positions i and i+1, appending s_0
// negates position 1. Generator indices are the subscripts used in print.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwg {

enum class Family : std::uint8_t { A, B };

class GroupSpec {
 public:
  // Throws InvalidInput unless n >= 2 (type A) or n >= 1 (type B).
  GroupSpec(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }

  int min_generator() const { return family_ == Family::A ? 1 : 0; }
  int max_generator() const { return n_ - 1; }
  int generator_count() const { return max_generator() - min_generator() + 1; }
  bool has_generator(int g) const { return g >= min_generator() && g <= max_generator(); }

  // C(n,2) in type A, n^2 in type B. Also the length of the longest element.
  int hyperplane_count() const;

  // Order of s_i s_j: 1, 2, 3, or 4 (the s_0 s_1 relation in type B).
  int braid_order(int i, int j) const;

  // "A4", "B3".
  std::string name() const;

  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_;
  int n_;
};

// Parses "A" / "B" (case-insensitive).
Family parse_family(std::string_view text);

class Element {
 public:
  // Throws InvalidInput unless the absolute values of images form {1..n}
  // (and all entries are positive in type A).
  Element(GroupSpec spec, std::vector<int> images);

  static Element identity(GroupSpec spec);
  static Element longest(GroupSpec spec);

  // Accepts "w0", "3412", "3,4,1,2" or "-3,-2,-1".
  static Element parse(GroupSpec spec, std::string_view text);

  const GroupSpec& spec() const { return spec_; }
  std::span<const int> images() const { return images_; }
  // One-based position, as in the one-line notation w(1)..w(n).
  int at(int position) const { return images_[static_cast<std::size_t>(position - 1)]; }

  // Composition of functions on positions: (u*v)(j) = u(v(j)), with signs.
  Element operator*(const Element& other) const;
  Element inverse() const;
  Element times_generator(int g) const;

  bool is_longest() const;

  // "3412" when every entry is a single positive digit, else "-3,-2,-1".
  std::string to_string() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.spec_ <=> b.spec_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  GroupSpec spec_;
  std::vector<int> images_;
};

class Word {
 public:
  // Throws InvalidInput if a letter is outside the spec's generator range.
  Word(GroupSpec spec, std::span<const int> letters);
  Word(GroupSpec spec, std::initializer_list<int> letters);
  explicit Word(GroupSpec spec) : spec_(spec) {}

  // Accepts a compact digit string "121321" or a comma list "10,11,10".
  // The empty string is the empty word.
  static Word parse(GroupSpec spec, std::string_view text);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }
  std::span<const std::uint8_t> letters() const { return letters_; }
  std::vector<int> to_vector() const { return {letters_.begin(), letters_.end()}; }

  Word concat(const Word& other) const;
  Word reversed() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.spec_ <=> b.spec_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend class WordBuilder;
  GroupSpec spec_;
  std::vector<std::uint8_t> letters_;
};

// Bulk construction without per-letter validation, for enumeration loops
// whose letters are generated in range.
class WordBuilder {
 public:
  static Word from_trusted(GroupSpec spec, std::vector<std::uint8_t> letters) {
    Word w(spec);
    w.letters_ = std::move(letters);
    return w;
  }
};

enum class HyperplaneKind : std::uint8_t {
  Coordinate,  // x_i = 0 (type B)
  Minus,       // x_i = -x_j (type B)
  Plus,        // x_i = x_j (both types)
};

struct Hyperplane {
  Family family;
  HyperplaneKind kind;
  int i;
  int j;  // equals i for Coordinate

  // Validating factories. Pair indices may be given in either order.
  static Hyperplane pair(const GroupSpec& spec, int a, int b);
  static Hyperplane plus(const GroupSpec& spec, int a, int b);
  static Hyperplane minus(const GroupSpec& spec, int a, int b);
  static Hyperplane coordinate(const GroupSpec& spec, int a);

  // Type A: "H12" (or "H{10,11}" for two-digit indices).
  // Type B: "x1=0", "x1=x2", "x1=-x2".
  std::string name() const;

  // Integer normal vector of length n in the standard coordinates.
  std::vector<long long> normal(int n) const;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct CrossingSequence {
  Word word;
  std::vector<Hyperplane> crossings;
};

// Left-to-right product of the generators, applied to the identity.
Element evaluate(const Word& word);

// Number of hyperplanes separating the base chamber from w's chamber.
int length(const Element& element);

bool is_reduced(const Word& word);

// Hyperplanes separating the base chamber from w's chamber, sorted.
std::vector<Hyperplane> inversion_set(const Element& element);

// Hyperplane crossed when moving from chamber u to u * s_g.
Hyperplane wall(const Element& u, int g);

// Throws DomainError for a non-reduced word.
CrossingSequence crossing_sequence(const Word& word);

// Words reachable by a single braid relation, with the position and length
// of the rewritten window. Unsorted; consumers order as needed.
struct BraidMove {
  Word result;
  std::size_t position;
  int width;  // 2 for a commutation, 3 or 4 for a long move
};
std::vector<BraidMove> braid_moves(const Word& word);

// Right descents: generators g with length(w * s_g) < length(w).
std::vector<int> right_descents(const Element& w);

// Every element of the group, sorted.
std::vector<Element> all_elements(const GroupSpec& spec);

}  // namespace rwg
