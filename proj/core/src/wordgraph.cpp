#include "rwgraph/wordgraph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

#include "parallel.hpp"
#include "rwgraph/canonical.hpp"
#include "rwgraph/errors.hpp"

namespace rwg {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 512)) * 1099511628211ull;
    return h;
  }
};

bool is_right_descent(const std::vector<int>& images, int g) {
  return g == 0 ? images[0] < 0 : images[static_cast<std::size_t>(g - 1)] > images[static_cast<std::size_t>(g)];
}

void apply_generator(std::vector<int>& images, int g) {
  if (g == 0) {
    images[0] = -images[0];
  } else {
    std::swap(images[static_cast<std::size_t>(g - 1)], images[static_cast<std::size_t>(g)]);
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

class WordCounter {
 public:
  explicit WordCounter(const GroupSpec& spec) : spec_(spec) {}

  std::uint64_t count(std::vector<int>& images) {
    if (auto it = memo_.find(images); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    bool any = false;
    for (int g = spec_.min_generator(); g <= spec_.max_generator(); ++g) {
      if (!is_right_descent(images, g)) continue;
      any = true;
      apply_generator(images, g);
      total = saturating_add(total, count(images));
      apply_generator(images, g);
    }
    if (!any) total = 1;  // identity
    memo_.emplace(images, total);
    return total;
  }

 private:
  GroupSpec spec_;
  std::unordered_map<std::vector<int>, std::uint64_t, ImagesHash> memo_;
};

}  // namespace

std::uint64_t count_words(const Element& w) {
  WordCounter counter(w.spec());
  std::vector<int> images(w.images().begin(), w.images().end());
  return counter.count(images);
}

std::vector<Word> enumerate_words(const Element& w, const EnumerateOptions& options) {
  const auto total = count_words(w);
  if (total > options.vertex_budget) {
    throw BudgetExceeded("element " + w.to_string() + " of " + w.spec().name() + " has " + std::to_string(total) +
                         " reduced words, above the vertex budget of " + std::to_string(options.vertex_budget));
  }
  const auto& spec = w.spec();
  const auto len = static_cast<std::size_t>(length(w));
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));

  // Peel final letters off w^{-1}: each peeled generator is the next leading
  // letter of a word for w, so ascending descents give lexicographic order.
  auto inv = w.inverse();
  std::vector<int> images(inv.images().begin(), inv.images().end());
  std::vector<std::uint8_t> buffer(len);
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == len) {
      out.push_back(WordBuilder::from_trusted(spec, buffer));
      return;
    }
    for (int g = spec.min_generator(); g <= spec.max_generator(); ++g) {
      if (!is_right_descent(images, g)) continue;
      apply_generator(images, g);
      buffer[depth] = static_cast<std::uint8_t>(g);
      self(self, depth + 1);
      apply_generator(images, g);
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<std::pair<Word, Rank2Flat>> braid_neighbors(const Word& r) {
  auto seq = crossing_sequence(r);
  const auto& arr = arrangement_for(r.spec());
  std::vector<std::pair<Word, Rank2Flat>> out;
  for (auto& move : braid_moves(r)) {
    int f = arr.flat_of_pair(arr.index_of(seq.crossings[move.position]), arr.index_of(seq.crossings[move.position + 1]));
    out.emplace_back(std::move(move.result), arr.flat(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- WordGraph -----------------------------------------------------------------

std::optional<std::uint32_t> WordGraph::index_of(const Word& r) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), r);
  if (it == vertices_.end() || !(*it == r)) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::uint32_t WordGraph::require_index(const Word& r) const {
  auto idx = index_of(r);
  if (!idx) {
    throw DomainError("word " + r.to_string() + " is not a reduced word of " + element_.to_string() + " in " +
                      spec().name());
  }
  return *idx;
}

WordGraph build_graph(const Element& w, const BuildOptions& options) {
  WordGraph g(w);
  g.vertices_ = enumerate_words(w, EnumerateOptions{options.vertex_budget});
  const auto& arr = arrangement_for(w.spec());
  const std::size_t count = g.vertices_.size();
  OrientationTable orientation(w);
  g.l2_ = orientation.l2();
  g.crossings_.resize(count);
  g.signatures_.resize(count);
  std::vector<std::vector<Edge>> local(count);

  detail::parallel_for(count, options.workers, [&](unsigned, std::size_t v) {
    const auto& word = g.vertices_[v];
    Element u = Element::identity(w.spec());
    auto& cross = g.crossings_[v];
    cross.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
      cross.push_back(arr.index_of(wall(u, word[k])));
      u = u.times_generator(word[k]);
    }
    g.signatures_[v] = orientation.signature_from_crossings(cross);
    for (auto& move : braid_moves(word)) {
      auto other = g.index_of(move.result);
      if (!other) throw InvariantViolation("braid move left R(w): " + word.to_string() + " -> " + move.result.to_string());
      if (*other <= v) continue;
      int f = arr.flat_of_pair(cross[move.position], cross[move.position + 1]);
      local[v].push_back(Edge{static_cast<std::uint32_t>(v), *other, f});
    }
  });

  for (auto& list : local) {
    std::sort(list.begin(), list.end(), [](const Edge& a, const Edge& b) { return a.v < b.v; });
    g.edges_.insert(g.edges_.end(), list.begin(), list.end());
  }

  std::vector<std::uint32_t> degree(count + 1, 0);
  for (const auto& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(count + 1, 0);
  for (std::size_t v = 0; v < count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[count]);
  std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }

  // Labels are assigned directly from the move position; the separation sets
  // are the independent check.
  for (const auto& e : g.edges_) {
    auto diff = g.signatures_[e.u] ^ g.signatures_[e.v];
    if (diff.count() != 1 || !diff.test(e.flat)) {
      throw InvariantViolation("edge " + g.vertices_[e.u].to_string() + " -- " + g.vertices_[e.v].to_string() +
                               " is not separated by exactly its label " + arr.flat(e.flat).name());
    }
  }
  if (!g.edges_.empty() && options.validation_sample > 0) {
    std::size_t stride = std::max<std::size_t>(1, g.edges_.size() / options.validation_sample);
    for (std::size_t k = 0; k < g.edges_.size(); k += stride) {
      const auto& e = g.edges_[k];
      auto sep = separation(g.vertices_[e.u], g.vertices_[e.v]);
      if (sep.size() != 1 || !sep.flats.test(e.flat)) {
        throw InvariantViolation("edge label " + arr.flat(e.flat).name() + " disagrees with separation() on " +
                                 g.vertices_[e.u].to_string() + " -- " + g.vertices_[e.v].to_string());
      }
    }
  }
  return g;
}

// --- distances -------------------------------------------------------------

int bfs_eccentricity(const WordGraph& g, std::uint32_t source, std::vector<int>& distances) {
  const auto& off = g.offsets();
  const auto& tgt = g.targets();
  distances.assign(g.vertex_count(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.vertex_count());
  distances[source] = 0;
  queue.push_back(source);
  int ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto v = queue[head];
    int dv = distances[v];
    ecc = std::max(ecc, dv);
    for (auto k = off[v]; k < off[v + 1]; ++k) {
      auto u = tgt[k];
      if (distances[u] < 0) {
        distances[u] = dv + 1;
        queue.push_back(u);
      }
    }
  }
  if (queue.size() != g.vertex_count()) {
    throw InvariantViolation("G(w) is disconnected for w = " + g.element().to_string());
  }
  return ecc;
}

DistanceReport bfs_distances(const WordGraph& g, const Word& source) {
  auto s = g.require_index(source);
  DistanceReport report{source, {}, 0, {}};
  report.eccentricity = bfs_eccentricity(g, s, report.distances);
  report.lower_bound_gaps.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    int gap = report.distances[v] - g.separation_size(s, v);
    if (gap < 0 || gap % 2 != 0) {
      throw InvariantViolation("distance " + std::to_string(report.distances[v]) + " from " + source.to_string() +
                               " to " + g.vertices()[v].to_string() + " is incompatible with separation size " +
                               std::to_string(g.separation_size(s, v)));
    }
    report.lower_bound_gaps[v] = gap;
  }
  return report;
}

int diameter_all_pairs(const WordGraph& g, unsigned workers) {
  const auto count = g.vertex_count();
  workers = std::min<unsigned>(detail::resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<int> ecc(count, 0);
  std::vector<std::vector<int>> scratch(workers);
  detail::parallel_for(count, workers, [&](unsigned worker, std::size_t v) {
    ecc[v] = bfs_eccentricity(g, static_cast<std::uint32_t>(v), scratch[worker]);
  });
  return count == 0 ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

BoundedDiameter diameter_bounding(const WordGraph& g, const std::vector<std::uint32_t>& seeds, int max_bfs) {
  const auto count = g.vertex_count();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> lo(count, 0);
  std::vector<int> hi(count, kInf);
  std::vector<bool> done(count, false);
  std::vector<int> dist;
  BoundedDiameter out;
  out.upper = kInf;
  std::size_t next_seed = 0;
  bool pick_high = true;

  auto refresh = [&]() {
    out.lower = *std::max_element(lo.begin(), lo.end());
    out.upper = *std::max_element(hi.begin(), hi.end());
  };

  while (out.bfs_runs < max_bfs && count > 0) {
    std::optional<std::uint32_t> v;
    while (next_seed < seeds.size() && !v) {
      auto s = seeds[next_seed++];
      if (!done[s]) v = s;
    }
    if (!v) {
      // Alternate between the largest upper bound and the smallest lower bound
      // among undetermined vertices.
      for (std::uint32_t u = 0; u < count; ++u) {
        if (done[u] || lo[u] == hi[u]) continue;
        if (!v || (pick_high ? hi[u] > hi[*v] : lo[u] < lo[*v])) v = u;
      }
      pick_high = !pick_high;
    }
    if (!v) break;
    int ecc = bfs_eccentricity(g, *v, dist);
    ++out.bfs_runs;
    done[*v] = true;
    for (std::uint32_t u = 0; u < count; ++u) {
      lo[u] = std::max({lo[u], dist[u], ecc - dist[u]});
      hi[u] = std::min(hi[u], ecc + dist[u]);
    }
    lo[*v] = hi[*v] = ecc;
    refresh();
    if (out.converged()) break;
  }
  if (count == 0) out.upper = 0;
  return out;
}

DiameterResult diameter(const WordGraph& g, DiameterMode mode, const DiameterOptions& options) {
  if (mode == DiameterMode::TheoremShortcut) {
    if (!g.element().is_longest()) {
      throw UnsupportedMode("the diameter shortcut |L2| holds only for the longest element; " +
                            g.element().to_string() + " is not w0 of " + g.spec().name() +
                            " (use conjecture for its bounds, or --mode exact)");
    }
    return {arrangement_for(g.spec()).flat_count(), true, "theorem"};
  }
  if (g.vertex_count() <= options.exhaustive_threshold) {
    return {diameter_all_pairs(g, options.workers), true, "all-pairs-bfs"};
  }

  std::vector<std::uint32_t> seeds;
  auto r0 = canonical_word(g.element());
  seeds.push_back(g.require_index(r0));
  if (g.element().is_longest()) seeds.push_back(g.require_index(antipode(r0)));
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.vertex_count() - 1));
  std::vector<int> dist;
  for (int k = 0; k < options.random_sweeps; ++k) {
    auto start = pick(rng);
    bfs_eccentricity(g, start, dist);
    auto far = static_cast<std::uint32_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    seeds.push_back(start);
    seeds.push_back(far);
  }
  auto bound = diameter_bounding(g, seeds, options.max_bfs);
  if (bound.converged()) return {bound.lower, true, "eccentricity-bounding"};
  return {bound.lower, false, "eccentricity-bounding (not exhaustive)"};
}

AccessibilityResult is_accessible(const WordGraph& g, const Word& r0) {
  auto report = bfs_distances(g, r0);
  AccessibilityResult out;
  out.eccentricity = report.eccentricity;
  int worst = 0;
  std::optional<std::uint32_t> worst_v;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (report.lower_bound_gaps[v] > worst) {
      worst = report.lower_bound_gaps[v];
      worst_v = v;
    }
  }
  if (worst_v) {
    out.accessible = false;
    int d = report.distances[*worst_v];
    out.witness = AccessibilityWitness{g.vertices()[*worst_v], d, d - worst};
  }
  return out;
}

Word antipode(const Word& r) {
  const auto& spec = r.spec();
  if (!(evaluate(r) == Element::longest(spec)) || static_cast<int>(r.size()) != spec.hyperplane_count()) {
    throw DomainError("antipode is defined on reduced words of w0; " + r.to_string() + " is not one in " +
                      spec.name());
  }
  std::vector<int> letters;
  letters.reserve(r.size());
  for (std::size_t k = r.size(); k-- > 0;) {
    letters.push_back(spec.family() == Family::A ? spec.n() - r[k] : r[k]);
  }
  return Word(spec, letters);
}

}  // namespace rwg
