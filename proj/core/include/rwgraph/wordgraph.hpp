#pragma once

// The graph G(w) on reduced words of an element w, edges given by single
// braid relations and labeled by the rank-two flat where the move happens.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwgraph/coxeter.hpp"
#include "rwgraph/rank2.hpp"

namespace rwg {

inline constexpr std::uint64_t kDefaultVertexBudget = 5'000'000;

struct EnumerateOptions {
  std::uint64_t vertex_budget = kDefaultVertexBudget;
};

// Number of reduced words of w, saturating at UINT64_MAX.
std::uint64_t count_words(const Element& w);

// All reduced words of w in lexicographic order. Throws BudgetExceeded when
// the count exceeds options.vertex_budget.
std::vector<Word> enumerate_words(const Element& w, const EnumerateOptions& options = {});

// Words one braid move away, with the flat labelling each move, sorted by word.
std::vector<std::pair<Word, Rank2Flat>> braid_neighbors(const Word& r);

struct Edge {
  std::uint32_t u;
  std::uint32_t v;  // u < v
  int flat;         // index into arrangement_for(spec)
};

struct BuildOptions {
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  unsigned workers = 0;  // 0 = hardware concurrency
  // Number of edges whose direct label is re-derived through separation().
  std::size_t validation_sample = 256;
};

class WordGraph {
 public:
  const GroupSpec& spec() const { return element_.spec(); }
  const Element& element() const { return element_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::uint32_t> index_of(const Word& r) const;
  // Throws DomainError if r is not a vertex.
  std::uint32_t require_index(const Word& r) const;

  // Adjacency in CSR form: neighbours of v are targets()[offsets()[v] .. offsets()[v+1]).
  const std::vector<std::uint32_t>& offsets() const { return offsets_; }
  const std::vector<std::uint32_t>& targets() const { return targets_; }

  // Crossing sequence of vertex v as hyperplane indices.
  const std::vector<int>& crossings(std::uint32_t v) const { return crossings_[v]; }

  // Orientation signature of each vertex; separation(r, r') = sig(r) xor sig(r').
  const FlatSet& signature(std::uint32_t v) const { return signatures_[v]; }
  int separation_size(std::uint32_t a, std::uint32_t b) const { return xor_count(signatures_[a], signatures_[b]); }
  const FlatSet& l2() const { return l2_; }

  Rank2Flat edge_label(const Edge& e) const { return arrangement_for(spec()).flat(e.flat); }

 private:
  friend WordGraph build_graph(const Element& w, const BuildOptions& options);
  explicit WordGraph(Element w) : element_(std::move(w)) {}

  Element element_;
  std::vector<Word> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::vector<int>> crossings_;
  std::vector<FlatSet> signatures_;
  FlatSet l2_;
};

WordGraph build_graph(const Element& w, const BuildOptions& options = {});

struct DistanceReport {
  Word source;
  std::vector<int> distances;  // indexed like g.vertices()
  int eccentricity = 0;
  std::vector<int> lower_bound_gaps;  // distance - |separation(source, v)|
};

// Throws DomainError if source is not a vertex of g.
DistanceReport bfs_distances(const WordGraph& g, const Word& source);

// Plain BFS from a vertex index; the distance array is overwritten.
int bfs_eccentricity(const WordGraph& g, std::uint32_t source, std::vector<int>& distances);

enum class DiameterMode { Exact, TheoremShortcut };

struct DiameterOptions {
  std::size_t exhaustive_threshold = 100'000;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  int random_sweeps = 8;
  int max_bfs = 64;  // BFS budget of the bounding search on large graphs
};

struct DiameterResult {
  int value = 0;
  // false: value is a certified lower bound only.
  bool exhaustive = true;
  std::string method;
};

// Exact: all-pairs BFS up to the exhaustive threshold, otherwise eccentricity
// bounding seeded from the canonical word and its antipode plus random double
// sweeps. TheoremShortcut: |L2| for w0, no traversal; throws UnsupportedMode
// for any other element.
DiameterResult diameter(const WordGraph& g, DiameterMode mode, const DiameterOptions& options = {});

// BFS from every vertex.
int diameter_all_pairs(const WordGraph& g, unsigned workers = 0);

// Eccentricity-bounding search. Runs BFS from vertices chosen to tighten the
// per-vertex eccentricity bounds until lower and upper diameter bounds meet
// or max_bfs traversals have run. Seeds are tried first.
struct BoundedDiameter {
  int lower = 0;
  int upper = 0;
  int bfs_runs = 0;
  bool converged() const { return lower == upper; }
};
BoundedDiameter diameter_bounding(const WordGraph& g, const std::vector<std::uint32_t>& seeds, int max_bfs);

struct AccessibilityWitness {
  Word word;
  int distance = 0;
  int separation = 0;
  int gap() const { return distance - separation; }
};

struct AccessibilityResult {
  bool accessible = true;
  int eccentricity = 0;
  // For an inaccessible source: a vertex of maximal gap (lexicographically first).
  std::optional<AccessibilityWitness> witness;
};

AccessibilityResult is_accessible(const WordGraph& g, const Word& r0);

// The word crossing every hyperplane in reversed order. Type A: reverse and
// replace i by n - i. Type B: reverse. Throws DomainError unless r is a
// reduced word of w0.
Word antipode(const Word& r);

// Graphviz rendering, vertices labeled by words and edges by flat names.
std::string to_dot(const WordGraph& g);

// {spec, element, vertices[], edges[{u,v,label}], stats{vertexCount, edgeCount, diameter?}}
std::string to_json(const WordGraph& g, std::optional<DiameterResult> diameter = std::nullopt);

}  // namespace rwg
