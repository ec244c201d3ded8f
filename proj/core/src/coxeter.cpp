#include "rwgraph/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "rwgraph/errors.hpp"

namespace rwg {

namespace {

int sign(int x) { return x < 0 ? -1 : 1; }

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto token = text.substr(start, end - start);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
      if (!token.empty() && token.front() == '+') token.remove_prefix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidInput("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
      }
      out.push_back(value);
      start = end + 1;
    }
    return out;
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
    out.push_back(c - '0');
  }
  return out;
}

std::string join_list(std::span<const int> values) {
  bool compact = std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace

GroupSpec::GroupSpec(Family family, int n) : family_(family), n_(n) {
  if (family == Family::A && n < 2) throw InvalidInput("type A requires n >= 2, got " + std::to_string(n));
  if (family == Family::B && n < 1) throw InvalidInput("type B requires n >= 1, got " + std::to_string(n));
  if (n > 255) throw InvalidInput("rank too large: " + std::to_string(n));
}

int GroupSpec::hyperplane_count() const { return family_ == Family::A ? n_ * (n_ - 1) / 2 : n_ * n_; }

int GroupSpec::braid_order(int i, int j) const {
  if (i == j) return 1;
  if (std::abs(i - j) >= 2) return 2;
  if (family_ == Family::B && std::min(i, j) == 0) return 4;
  return 3;
}

std::string GroupSpec::name() const { return (family_ == Family::A ? "A" : "B") + std::to_string(n_); }

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  throw InvalidInput("unsupported family '" + std::string(text) + "' (expected A or B)");
}

// --- Element ---------------------------------------------------------------

Element::Element(GroupSpec spec, std::vector<int> images) : spec_(spec), images_(std::move(images)) {
  const int n = spec_.n();
  if (static_cast<int>(images_.size()) != n) {
    throw InvalidInput("element of " + spec_.name() + " needs " + std::to_string(n) + " entries, got " +
                       std::to_string(images_.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw InvalidInput("not a " + std::string(spec_.family() == Family::A ? "permutation" : "signed permutation") +
                         " of 1.." + std::to_string(n) + ": " + join_list(images_));
    }
    if (v < 0 && spec_.family() == Family::A) {
      throw InvalidInput("type A element has a negative entry: " + join_list(images_));
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

Element Element::identity(GroupSpec spec) {
  std::vector<int> images(static_cast<std::size_t>(spec.n()));
  std::iota(images.begin(), images.end(), 1);
  return Element(spec, std::move(images));
}

Element Element::longest(GroupSpec spec) {
  std::vector<int> images(static_cast<std::size_t>(spec.n()));
  for (int k = 0; k < spec.n(); ++k) {
    images[static_cast<std::size_t>(k)] = spec.family() == Family::A ? spec.n() - k : -(k + 1);
  }
  return Element(spec, std::move(images));
}

Element Element::parse(GroupSpec spec, std::string_view text) {
  if (text == "w0") return longest(spec);
  return Element(spec, parse_int_list(text, "element"));
}

Element Element::operator*(const Element& other) const {
  if (!(spec_ == other.spec_)) throw InvalidInput("cannot multiply elements of different groups");
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    int v = other.images_[j];
    out[j] = sign(v) * images_[static_cast<std::size_t>(std::abs(v) - 1)];
  }
  return Element(spec_, std::move(out));
}

Element Element::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    int v = images_[j];
    out[static_cast<std::size_t>(std::abs(v) - 1)] = sign(v) * static_cast<int>(j + 1);
  }
  return Element(spec_, std::move(out));
}

Element Element::times_generator(int g) const {
  if (!spec_.has_generator(g)) {
    throw InvalidInput("generator " + std::to_string(g) + " out of range for " + spec_.name());
  }
  Element out = *this;
  if (g == 0) {
    out.images_[0] = -out.images_[0];
  } else {
    std::swap(out.images_[static_cast<std::size_t>(g - 1)], out.images_[static_cast<std::size_t>(g)]);
  }
  return out;
}

bool Element::is_longest() const { return *this == longest(spec_); }

std::string Element::to_string() const { return join_list(images_); }

// --- Word ------------------------------------------------------------------

Word::Word(GroupSpec spec, std::span<const int> letters) : spec_(spec) {
  letters_.reserve(letters.size());
  for (int g : letters) {
    if (!spec_.has_generator(g)) {
      throw InvalidInput("letter " + std::to_string(g) + " out of range [" + std::to_string(spec_.min_generator()) +
                         "," + std::to_string(spec_.max_generator()) + "] for " + spec_.name());
    }
    letters_.push_back(static_cast<std::uint8_t>(g));
  }
}

Word::Word(GroupSpec spec, std::initializer_list<int> letters)
    : Word(spec, std::span<const int>(letters.begin(), letters.size())) {}

Word Word::parse(GroupSpec spec, std::string_view text) {
  auto letters = parse_int_list(text, "word");
  return Word(spec, letters);
}

Word Word::concat(const Word& other) const {
  if (!(spec_ == other.spec_)) throw InvalidInput("cannot concatenate words of different groups");
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

std::string Word::to_string() const {
  std::vector<int> v(letters_.begin(), letters_.end());
  return join_list(v);
}

// --- Hyperplane ------------------------------------------------------------

namespace {

void check_index(const GroupSpec& spec, int a) {
  if (a < 1 || a > spec.n()) {
    throw InvalidInput("hyperplane index " + std::to_string(a) + " out of range 1.." + std::to_string(spec.n()));
  }
}

Hyperplane make_pair(const GroupSpec& spec, HyperplaneKind kind, int a, int b) {
  check_index(spec, a);
  check_index(spec, b);
  if (a == b) throw InvalidInput("hyperplane pair needs distinct indices, got " + std::to_string(a) + " twice");
  return Hyperplane{spec.family(), kind, std::min(a, b), std::max(a, b)};
}

std::string index_pair(int i, int j) {
  if (i <= 9 && j <= 9) return std::to_string(i) + std::to_string(j);
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

Hyperplane Hyperplane::pair(const GroupSpec& spec, int a, int b) {
  return make_pair(spec, HyperplaneKind::Plus, a, b);
}

Hyperplane Hyperplane::plus(const GroupSpec& spec, int a, int b) {
  return make_pair(spec, HyperplaneKind::Plus, a, b);
}

Hyperplane Hyperplane::minus(const GroupSpec& spec, int a, int b) {
  if (spec.family() != Family::B) throw InvalidInput("x_i = -x_j is not a hyperplane of type A");
  return make_pair(spec, HyperplaneKind::Minus, a, b);
}

Hyperplane Hyperplane::coordinate(const GroupSpec& spec, int a) {
  if (spec.family() != Family::B) throw InvalidInput("x_i = 0 is not a hyperplane of type A");
  check_index(spec, a);
  return Hyperplane{spec.family(), HyperplaneKind::Coordinate, a, a};
}

std::string Hyperplane::name() const {
  if (family == Family::A) return "H" + index_pair(i, j);
  auto xi = "x" + std::to_string(i);
  auto xj = "x" + std::to_string(j);
  switch (kind) {
    case HyperplaneKind::Coordinate: return xi + "=0";
    case HyperplaneKind::Minus: return xi + "=-" + xj;
    case HyperplaneKind::Plus: return xi + "=" + xj;
  }
  return {};
}

std::vector<long long> Hyperplane::normal(int n) const {
  std::vector<long long> v(static_cast<std::size_t>(n), 0);
  auto at = [&](int idx) -> long long& { return v[static_cast<std::size_t>(idx - 1)]; };
  switch (kind) {
    case HyperplaneKind::Coordinate: at(i) = 1; break;
    case HyperplaneKind::Minus: at(i) = 1; at(j) = 1; break;
    case HyperplaneKind::Plus: at(i) = 1; at(j) = -1; break;
  }
  return v;
}

// --- operations ------------------------------------------------------------

Element evaluate(const Word& word) {
  Element e = Element::identity(word.spec());
  for (std::size_t k = 0; k < word.size(); ++k) e = e.times_generator(word[k]);
  return e;
}

namespace {

// Coordinates of w applied to the interior point (1, 2, ..., n) of the base
// chamber: coordinate |w(j)| equals sign(w(j)) * j. A hyperplane with normal
// f separates the base chamber from w's chamber iff f changes sign.
std::vector<int> chamber_point(const Element& w) {
  auto images = w.images();
  std::vector<int> q(images.size() + 1, 0);
  for (std::size_t j = 0; j < images.size(); ++j) {
    int v = images[j];
    q[static_cast<std::size_t>(std::abs(v))] = sign(v) * static_cast<int>(j + 1);
  }
  return q;
}

bool separates(const std::vector<int>& q, HyperplaneKind kind, int i, int j) {
  auto at = [&](int idx) { return q[static_cast<std::size_t>(idx)]; };
  switch (kind) {
    case HyperplaneKind::Coordinate: return at(i) < 0;          // base value i > 0
    case HyperplaneKind::Plus: return at(j) - at(i) < 0;        // base value j - i > 0
    case HyperplaneKind::Minus: return at(i) + at(j) < 0;       // base value i + j > 0
  }
  return false;
}

}  // namespace

std::vector<Hyperplane> inversion_set(const Element& element) {
  const auto& spec = element.spec();
  const int n = spec.n();
  auto q = chamber_point(element);
  std::vector<Hyperplane> out;
  auto consider = [&](HyperplaneKind kind, int i, int j) {
    if (separates(q, kind, i, j)) out.push_back(Hyperplane{spec.family(), kind, i, j});
  };
  if (spec.family() == Family::B) {
    for (int i = 1; i <= n; ++i) consider(HyperplaneKind::Coordinate, i, i);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) consider(HyperplaneKind::Minus, i, j);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) consider(HyperplaneKind::Plus, i, j);
  std::sort(out.begin(), out.end());
  return out;
}

int length(const Element& element) {
  const auto& spec = element.spec();
  const int n = spec.n();
  auto q = chamber_point(element);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (spec.family() == Family::B && separates(q, HyperplaneKind::Coordinate, i, i)) ++count;
    for (int j = i + 1; j <= n; ++j) {
      if (separates(q, HyperplaneKind::Plus, i, j)) ++count;
      if (spec.family() == Family::B && separates(q, HyperplaneKind::Minus, i, j)) ++count;
    }
  }
  return count;
}

bool is_reduced(const Word& word) { return static_cast<int>(word.size()) == length(evaluate(word)); }

Hyperplane wall(const Element& u, int g) {
  const auto& spec = u.spec();
  if (!spec.has_generator(g)) {
    throw InvalidInput("generator " + std::to_string(g) + " out of range for " + spec.name());
  }
  if (g == 0) return Hyperplane{spec.family(), HyperplaneKind::Coordinate, std::abs(u.at(1)), std::abs(u.at(1))};
  int x = u.at(g);
  int y = u.at(g + 1);
  auto kind = sign(x) * sign(y) > 0 ? HyperplaneKind::Plus : HyperplaneKind::Minus;
  int a = std::abs(x);
  int b = std::abs(y);
  return Hyperplane{spec.family(), kind, std::min(a, b), std::max(a, b)};
}

CrossingSequence crossing_sequence(const Word& word) {
  CrossingSequence out{word, {}};
  out.crossings.reserve(word.size());
  Element u = Element::identity(word.spec());
  for (std::size_t k = 0; k < word.size(); ++k) {
    out.crossings.push_back(wall(u, word[k]));
    u = u.times_generator(word[k]);
  }
  auto sorted = out.crossings;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("word " + word.to_string() + " is not reduced in " + word.spec().name() +
                      " (it crosses a hyperplane twice)");
  }
  return out;
}

std::vector<BraidMove> braid_moves(const Word& word) {
  const auto& spec = word.spec();
  auto letters = word.letters();
  std::vector<BraidMove> out;
  auto rewrite = [&](std::size_t pos, int width) {
    std::vector<std::uint8_t> next(letters.begin(), letters.end());
    // Both sides of every relation alternate two letters; swap them.
    std::uint8_t a = next[pos];
    std::uint8_t b = next[pos + 1];
    for (int k = 0; k < width; ++k) next[pos + static_cast<std::size_t>(k)] = (k % 2 == 0) ? b : a;
    out.push_back(BraidMove{WordBuilder::from_trusted(spec, std::move(next)), pos, width});
  };
  for (std::size_t pos = 0; pos + 1 < letters.size(); ++pos) {
    int a = letters[pos];
    int b = letters[pos + 1];
    if (a == b) continue;
    int m = spec.braid_order(a, b);
    if (pos + static_cast<std::size_t>(m) > letters.size()) continue;
    bool alternating = true;
    for (int k = 2; k < m && alternating; ++k) {
      alternating = letters[pos + static_cast<std::size_t>(k)] == (k % 2 == 0 ? a : b);
    }
    if (alternating) rewrite(pos, m);
  }
  return out;
}

std::vector<int> right_descents(const Element& w) {
  std::vector<int> out;
  const auto& spec = w.spec();
  for (int g = spec.min_generator(); g <= spec.max_generator(); ++g) {
    bool descent = g == 0 ? w.at(1) < 0 : w.at(g) > w.at(g + 1);
    if (descent) out.push_back(g);
  }
  return out;
}

std::vector<Element> all_elements(const GroupSpec& spec) {
  const int n = spec.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Element> out;
  do {
    if (spec.family() == Family::A) {
      out.emplace_back(spec, perm);
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signed_perm = perm;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) signed_perm[static_cast<std::size_t>(k)] = -signed_perm[static_cast<std::size_t>(k)];
      }
      out.emplace_back(spec, std::move(signed_perm));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rwg
