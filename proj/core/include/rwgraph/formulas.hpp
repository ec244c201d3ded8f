#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwgraph/coxeter.hpp"
#include "rwgraph/wordgraph.hpp"

namespace rwg {

enum class RootFamily { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

RootFamily parse_root_family(std::string_view text);
std::string to_string(RootFamily family);
bool takes_parameter(RootFamily family);

// Number of rank-two flats. A takes n (the group is S_n, n >= 2), B takes
// n >= 1, D takes n >= 2, I2 takes m >= 2; the exceptional families take no
// parameter. Throws InvalidInput outside those ranges.
std::int64_t l2_closed_form(RootFamily family, std::optional<int> parameter = std::nullopt);

// Codimension-two subspaces counted directly from integer normal vectors:
// each hyperplane pair is closed under "normal lies in the span of the
// pair's normals" with an exact rank test. A, B, D only.
std::int64_t count_flats_by_geometry(RootFamily family, int n);

// Exact integer rank of a set of vectors (fraction-free elimination).
int integer_rank(std::vector<std::vector<long long>> rows);

struct ConjectureRow {
  Element w;
  std::size_t word_count = 0;
  int diameter = 0;
  int l2 = 0;
  int lower = 0;  // ceil(l2 / 2) in type A, ceil(l2 / 3) in type B
  int upper = 0;  // l2
  bool pass = false;
  bool passes_with_floor = false;
  bool within_twice_l2 = false;
};

struct RatioWitness {
  Element w;
  int diameter;
  int l2;
  double ratio() const { return static_cast<double>(diameter) / l2; }
};

struct ConjectureReport {
  GroupSpec spec;
  std::vector<ConjectureRow> rows;  // sorted by element
  std::optional<RatioWitness> min_ratio;
  std::optional<RatioWitness> max_ratio;

  bool all_pass() const;
  // Rows that fail under the ceiling convention but pass with floor.
  std::vector<Element> floor_only() const;
};

struct ConjectureOptions {
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  unsigned workers = 0;
  // Called after each element with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

// For every element of the group: exact diameter of G(w), |L2(w)|, and the
// conjectured bounds. Throws BudgetExceeded naming the first element whose
// word count exceeds the budget.
ConjectureReport conjecture_check(const GroupSpec& spec, const ConjectureOptions& options = {});

std::string to_text(const ConjectureReport& report);
// One JSON object per element, newline-separated, then a summary object.
std::string to_json_lines(const ConjectureReport& report);

}  // namespace rwg
