#include "rwgraph/rank2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "rwgraph/errors.hpp"

namespace rwg {

namespace {

// x_a = sigma * x_b, with a < b.
struct SignedPair {
  int a;
  int b;
  int sigma;
};

SignedPair as_signed_pair(const Hyperplane& h) {
  return {h.i, h.j, h.kind == HyperplaneKind::Plus ? 1 : -1};
}

Hyperplane from_signed(const GroupSpec& spec, int a, int b, int sigma) {
  return sigma > 0 ? Hyperplane::plus(spec, a, b) : Hyperplane::minus(spec, a, b);
}

std::vector<Hyperplane> b2_subsystem(const GroupSpec& spec, int a, int b) {
  return {Hyperplane::coordinate(spec, a), Hyperplane::coordinate(spec, b), Hyperplane::minus(spec, a, b),
          Hyperplane::plus(spec, a, b)};
}

// Combinatorial closure of two distinct hyperplanes to the flat through
// their intersection.
std::vector<Hyperplane> closure(const GroupSpec& spec, const Hyperplane& h1, const Hyperplane& h2) {
  using K = HyperplaneKind;
  const bool c1 = h1.kind == K::Coordinate;
  const bool c2 = h2.kind == K::Coordinate;
  if (c1 && c2) return b2_subsystem(spec, h1.i, h2.i);
  if (c1 || c2) {
    const auto& coord = c1 ? h1 : h2;
    const auto& pair = c1 ? h2 : h1;
    if (coord.i == pair.i || coord.i == pair.j) return b2_subsystem(spec, pair.i, pair.j);
    return {h1, h2};
  }
  if (h1.i == h2.i && h1.j == h2.j) return b2_subsystem(spec, h1.i, h1.j);
  auto p = as_signed_pair(h1);
  auto q = as_signed_pair(h2);
  int shared = 0;
  if (p.a == q.a || p.a == q.b) shared = p.a;
  if (p.b == q.a || p.b == q.b) shared = p.b;
  if (shared == 0) return {h1, h2};
  // x_u = s1 x_shared and x_v = s2 x_shared give x_u = s1 s2 x_v.
  int u = p.a == shared ? p.b : p.a;
  int v = q.a == shared ? q.b : q.a;
  return {h1, h2, from_signed(spec, std::min(u, v), std::max(u, v), p.sigma * q.sigma)};
}

std::string index_list(std::initializer_list<int> idx) {
  bool compact = std::all_of(idx.begin(), idx.end(), [](int k) { return k <= 9; });
  std::string out;
  bool first = true;
  for (int k : idx) {
    if (!compact && !first) out += ',';
    out += std::to_string(k);
    first = false;
  }
  return out;
}

}  // namespace

std::string Rank2Flat::name() const {
  if (spec.family() == Family::A) {
    if (members.size() == 3) {
      // {H_ij, H_ik, H_jk}
      return "X_{" + index_list({members[0].i, members[0].j, members[2].j}) + "}";
    }
    const auto& h = members[0];
    const auto& k = members[1];
    bool compact = h.j <= 9 && k.j <= 9;
    if (compact) return "X_{" + index_list({h.i, h.j}) + "," + index_list({k.i, k.j}) + "}";
    return "X_{{" + index_list({h.i, h.j}) + "},{" + index_list({k.i, k.j}) + "}}";
  }
  return "{" + members[0].name() + "," + members[1].name() + "}";
}

// --- Arrangement -------------------------------------------------------------

Arrangement::Arrangement(GroupSpec spec) : spec_(spec) {
  const int n = spec_.n();
  if (spec_.family() == Family::B) {
    for (int i = 1; i <= n; ++i) hyperplanes_.push_back(Hyperplane::coordinate(spec_, i));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) hyperplanes_.push_back(Hyperplane::minus(spec_, i, j));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) hyperplanes_.push_back(Hyperplane::plus(spec_, i, j));
  std::sort(hyperplanes_.begin(), hyperplanes_.end());

  const auto stride = static_cast<std::size_t>(n + 1);
  lookup_.assign(3 * stride * stride, -1);
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
    const auto& hp = hyperplanes_[h];
    lookup_[static_cast<std::size_t>(hp.kind) * stride * stride + static_cast<std::size_t>(hp.i) * stride +
            static_cast<std::size_t>(hp.j)] = static_cast<int>(h);
  }

  const std::size_t count = hyperplanes_.size();
  std::set<std::vector<int>> found;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      auto members = closure(spec_, hyperplanes_[a], hyperplanes_[b]);
      std::vector<int> idx;
      for (const auto& m : members) idx.push_back(index_of(m));
      std::sort(idx.begin(), idx.end());
      found.insert(std::move(idx));
    }
  }
  flats_.assign(found.begin(), found.end());

  pair_flat_.assign(count * count, -1);
  for (std::size_t f = 0; f < flats_.size(); ++f) {
    const auto& m = flats_[f];
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < m.size(); ++y) {
        if (x == y) continue;
        auto slot = static_cast<std::size_t>(m[x]) * count + static_cast<std::size_t>(m[y]);
        if (pair_flat_[slot] != -1) {
          throw InvariantViolation("hyperplane pair lies in two rank-two flats of " + spec_.name());
        }
        pair_flat_[slot] = static_cast<int>(f);
      }
    }
  }
}

int Arrangement::index_of(const Hyperplane& h) const {
  const auto stride = static_cast<std::size_t>(spec_.n() + 1);
  int idx = -1;
  if (h.family == spec_.family() && h.i >= 1 && h.j <= spec_.n() && h.i <= h.j) {
    idx = lookup_[static_cast<std::size_t>(h.kind) * stride * stride + static_cast<std::size_t>(h.i) * stride +
                  static_cast<std::size_t>(h.j)];
  }
  if (idx < 0) throw InvalidInput("hyperplane " + h.name() + " is not in the arrangement " + spec_.name());
  return idx;
}

Rank2Flat Arrangement::flat(int f) const {
  Rank2Flat out{spec_, {}};
  for (int h : flat_members(f)) out.members.push_back(hyperplane(h));
  return out;
}

int Arrangement::index_of(const Rank2Flat& flat) const {
  if (flat.members.size() < 2) throw InvalidInput("a rank-two flat needs at least two hyperplanes");
  int f = flat_of_pair(index_of(flat.members[0]), index_of(flat.members[1]));
  if (this->flat(f) != flat) throw InvalidInput("not a rank-two flat of " + spec_.name() + ": " + flat.name());
  return f;
}

const Arrangement& arrangement_for(const GroupSpec& spec) {
  static std::mutex mutex;
  static std::map<GroupSpec, std::unique_ptr<const Arrangement>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<const Arrangement>(spec);
  return *slot;
}

// --- SeparationSet -------------------------------------------------------------

bool SeparationSet::contains(const Rank2Flat& flat) const {
  return flats.test(arrangement_for(spec).index_of(flat));
}

std::vector<Rank2Flat> SeparationSet::to_flats() const {
  const auto& arr = arrangement_for(spec);
  std::vector<Rank2Flat> out;
  for (int f : flats.indices()) out.push_back(arr.flat(f));
  return out;
}

// --- operations ------------------------------------------------------------

std::vector<Rank2Flat> enumerate_flats(const GroupSpec& spec) {
  const auto& arr = arrangement_for(spec);
  std::vector<Rank2Flat> out;
  out.reserve(static_cast<std::size_t>(arr.flat_count()));
  for (int f = 0; f < arr.flat_count(); ++f) out.push_back(arr.flat(f));
  return out;
}

FlatSet l2_flat_set(const Element& w) {
  const auto& arr = arrangement_for(w.spec());
  std::vector<bool> inverted(static_cast<std::size_t>(arr.hyperplane_count()), false);
  for (const auto& h : inversion_set(w)) inverted[static_cast<std::size_t>(arr.index_of(h))] = true;
  FlatSet out = arr.empty_set();
  for (int f = 0; f < arr.flat_count(); ++f) {
    const auto& m = arr.flat_members(f);
    if (std::all_of(m.begin(), m.end(), [&](int h) { return inverted[static_cast<std::size_t>(h)]; })) out.set(f);
  }
  return out;
}

std::vector<Rank2Flat> l2_of(const Element& w) {
  const auto& arr = arrangement_for(w.spec());
  std::vector<Rank2Flat> out;
  for (int f : l2_flat_set(w).indices()) out.push_back(arr.flat(f));
  return out;
}

namespace {

std::vector<Hyperplane> restrict_order(const CrossingSequence& seq, const Rank2Flat& flat) {
  std::vector<Hyperplane> order;
  for (const auto& h : seq.crossings) {
    if (std::binary_search(flat.members.begin(), flat.members.end(), h)) order.push_back(h);
  }
  return order;
}

}  // namespace

InducedOrder induced_order(const Word& r, const Rank2Flat& flat) {
  auto seq = crossing_sequence(r);
  auto order = restrict_order(seq, flat);
  if (order.size() != flat.members.size()) {
    throw DomainError("flat " + flat.name() + " is not in L2 of " + evaluate(r).to_string() + " (word " +
                      r.to_string() + " crosses only " + std::to_string(order.size()) + " of its " +
                      std::to_string(flat.members.size()) + " hyperplanes)");
  }
  return {flat, std::move(order)};
}

SeparationSet separation(const Word& r, const Word& r2) {
  if (!(r.spec() == r2.spec())) throw DomainError("words from different groups");
  auto w = evaluate(r);
  if (!(evaluate(r2) == w)) {
    throw DomainError("words " + r.to_string() + " and " + r2.to_string() + " have different products");
  }
  auto seq1 = crossing_sequence(r);
  auto seq2 = crossing_sequence(r2);
  const auto& arr = arrangement_for(r.spec());
  SeparationSet out{r.spec(), arr.empty_set()};
  for (int f : l2_flat_set(w).indices()) {
    auto flat = arr.flat(f);
    if (restrict_order(seq1, flat) != restrict_order(seq2, flat)) out.flats.set(f);
  }
  return out;
}

// --- OrientationTable --------------------------------------------------------

OrientationTable::OrientationTable(const Element& w)
    : element_(w), arrangement_(&arrangement_for(w.spec())), l2_(l2_flat_set(w)) {
  for (int f : l2_.indices()) {
    const auto& m = arrangement_->flat_members(f);
    probe_flats_.push_back(f);
    probes_.emplace_back(m[0], m[1]);
  }
}

FlatSet OrientationTable::signature_from_crossings(const std::vector<int>& crossings) const {
  std::vector<int> position(static_cast<std::size_t>(arrangement_->hyperplane_count()), -1);
  for (std::size_t k = 0; k < crossings.size(); ++k) position[static_cast<std::size_t>(crossings[k])] = static_cast<int>(k);
  FlatSet out = arrangement_->empty_set();
  for (std::size_t p = 0; p < probes_.size(); ++p) {
    int a = position[static_cast<std::size_t>(probes_[p].first)];
    int b = position[static_cast<std::size_t>(probes_[p].second)];
    if (a < 0 || b < 0) throw DomainError("crossing sequence does not invert every flat of L2(w)");
    if (a > b) out.set(probe_flats_[p]);
  }
  return out;
}

FlatSet OrientationTable::signature(const Word& r) const {
  if (!(evaluate(r) == element_)) {
    throw DomainError("word " + r.to_string() + " is not a word for " + element_.to_string());
  }
  auto seq = crossing_sequence(r);
  std::vector<int> idx;
  idx.reserve(seq.crossings.size());
  for (const auto& h : seq.crossings) idx.push_back(arrangement_->index_of(h));
  return signature_from_crossings(idx);
}

// --- metric axioms -------------------------------------------------------------

MetricReport verify_metric_axioms(const std::vector<Word>& words, const MetricOptions& options,
                                  const SeparationFn& separation_fn) {
  MetricReport report;
  if (words.empty()) return report;
  SeparationFn sep = separation_fn ? separation_fn : SeparationFn(separation);
  const std::size_t count = words.size();

  auto fail = [&](std::string property, std::vector<Word> witness) {
    report.pass = false;
    ++report.violation_count;
    if (report.violations.size() < options.max_reported) {
      report.violations.push_back({std::move(property), std::move(witness)});
    }
  };

  std::set<Word> word_set(words.begin(), words.end());
  auto adjacent = [&](const Word& x, const Word& y) {
    for (const auto& move : braid_moves(x))
      if (move.result == y) return true;
    return false;
  };

  // Pairwise properties on a given (x, y) with cached separations.
  auto check_pair = [&](std::size_t i, std::size_t j, const SeparationSet& sij, const SeparationSet& sji) {
    const auto& x = words[i];
    const auto& y = words[j];
    ++report.checks;
    if (!(sij == sji)) fail("symmetry", {x, y});
    ++report.checks;
    if (i == j && sij.size() != 0) fail("separation(x,x) is empty", {x});
    if (i != j) {
      ++report.checks;
      if ((sij.size() == 1) != adjacent(x, y)) fail("|separation| == 1 iff one braid move", {x, y});
    }
  };

  // Injectivity of r -> separation(words[0], r).
  std::vector<SeparationSet> from_base;
  from_base.reserve(count);
  for (const auto& r : words) from_base.push_back(sep(words[0], r));
  {
    std::vector<std::size_t> order(count);
    for (std::size_t k = 0; k < count; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return from_base[a].flats < from_base[b].flats; });
    for (std::size_t k = 0; k + 1 < count; ++k) {
      ++report.checks;
      if (from_base[order[k]].flats == from_base[order[k + 1]].flats) {
        fail("injectivity of r -> separation(r0, r)", {words[0], words[order[k]], words[order[k + 1]]});
      }
    }
  }

  if (count <= options.exhaustive_threshold) {
    std::vector<SeparationSet> table;
    table.reserve(count * count);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) table.push_back(sep(words[i], words[j]));
    auto at = [&](std::size_t i, std::size_t j) -> const SeparationSet& { return table[i * count + j]; };
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) check_pair(i, j, at(i, j), at(j, i));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        for (std::size_t k = 0; k < count; ++k) {
          ++report.checks;
          if (!is_xor_of(at(i, k).flats, at(i, j).flats, at(j, k).flats)) {
            fail("separation(x,z) == separation(x,y) xor separation(y,z)", {words[i], words[j], words[k]});
          }
        }
    return report;
  }

  report.exhaustive = false;
  // Every braid neighbour must be at separation 1.
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& move : braid_moves(words[i])) {
      if (!word_set.count(move.result)) continue;
      ++report.checks;
      if (sep(words[i], move.result).size() != 1) fail("|separation| == 1 iff one braid move", {words[i], move.result});
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  for (std::uint64_t t = 0; t < options.sampled_triples; ++t) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    std::size_t k = pick(rng);
    auto sij = sep(words[i], words[j]);
    auto sji = sep(words[j], words[i]);
    auto sjk = sep(words[j], words[k]);
    auto sik = sep(words[i], words[k]);
    check_pair(i, j, sij, sji);
    ++report.checks;
    if (!is_xor_of(sik.flats, sij.flats, sjk.flats)) {
      fail("separation(x,z) == separation(x,y) xor separation(y,z)", {words[i], words[j], words[k]});
    }
  }
  return report;
}

}  // namespace rwg
