#include "rwgraph/formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "rwgraph/errors.hpp"
#include "rwgraph/rank2.hpp"

namespace rwg {

RootFamily parse_root_family(std::string_view text) {
  static const std::pair<std::string_view, RootFamily> table[] = {
      {"A", RootFamily::A},   {"B", RootFamily::B},   {"D", RootFamily::D},   {"E6", RootFamily::E6},
      {"E7", RootFamily::E7}, {"E8", RootFamily::E8}, {"F4", RootFamily::F4}, {"H3", RootFamily::H3},
      {"H4", RootFamily::H4}, {"I2", RootFamily::I2}};
  for (const auto& [name, family] : table)
    if (name == text) return family;
  throw InvalidInput("unknown root system family '" + std::string(text) + "'");
}

std::string to_string(RootFamily family) {
  switch (family) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::D: return "D";
    case RootFamily::E6: return "E6";
    case RootFamily::E7: return "E7";
    case RootFamily::E8: return "E8";
    case RootFamily::F4: return "F4";
    case RootFamily::H3: return "H3";
    case RootFamily::H4: return "H4";
    case RootFamily::I2: return "I2";
  }
  return "?";
}

bool takes_parameter(RootFamily family) {
  return family == RootFamily::A || family == RootFamily::B || family == RootFamily::D || family == RootFamily::I2;
}

std::int64_t l2_closed_form(RootFamily family, std::optional<int> parameter) {
  if (takes_parameter(family) && !parameter) {
    throw InvalidInput("family " + to_string(family) + " needs a parameter");
  }
  if (!takes_parameter(family) && parameter) {
    throw InvalidInput("family " + to_string(family) + " takes no parameter");
  }
  auto require = [&](int minimum) {
    if (*parameter < minimum) {
      throw InvalidInput("family " + to_string(family) + " needs parameter >= " + std::to_string(minimum) + ", got " +
                         std::to_string(*parameter));
    }
    return static_cast<std::int64_t>(*parameter);
  };
  switch (family) {
    case RootFamily::A: {
      auto n = require(2);
      return n * (n - 1) * (n - 2) * (3 * n - 5) / 24;
    }
    case RootFamily::B: {
      auto n = require(1);
      return n * (n - 1) * (3 * n * n - 5 * n + 1) / 6;
    }
    case RootFamily::D: {
      auto n = require(2);
      return n * (n - 1) * (3 * n * n - 11 * n + 13) / 6;
    }
    case RootFamily::I2: require(2); return 1;
    case RootFamily::E6: return 390;
    case RootFamily::E7: return 1281;
    case RootFamily::E8: return 4900;
    case RootFamily::F4: return 122;
    case RootFamily::H3: return 31;
    case RootFamily::H4: return 722;
  }
  return 0;
}

int integer_rank(std::vector<std::vector<long long>> rows) {
  // Bareiss elimination keeps every entry an integer minor.
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  long long prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    auto r = static_cast<std::size_t>(rank);
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++rank;
  }
  return rank;
}

std::int64_t count_flats_by_geometry(RootFamily family, int n) {
  std::vector<std::vector<long long>> normals;
  auto add = [&](std::initializer_list<std::pair<int, long long>> entries) {
    std::vector<long long> v(static_cast<std::size_t>(n), 0);
    for (auto [k, x] : entries) v[static_cast<std::size_t>(k)] = x;
    normals.push_back(std::move(v));
  };
  switch (family) {
    case RootFamily::A:
      if (n < 2) throw InvalidInput("type A needs n >= 2");
      break;
    case RootFamily::B:
      if (n < 1) throw InvalidInput("type B needs n >= 1");
      for (int i = 0; i < n; ++i) add({{i, 1}});
      break;
    case RootFamily::D:
      if (n < 2) throw InvalidInput("type D needs n >= 2");
      break;
    default: throw InvalidInput("geometric flat count supports A, B, D only, not " + to_string(family));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      add({{i, 1}, {j, -1}});
      if (family != RootFamily::A) add({{i, 1}, {j, 1}});
    }
  }

  const std::size_t count = normals.size();
  std::vector<bool> covered(count * count, false);
  std::int64_t flats = 0;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (covered[a * count + b]) continue;
      std::vector<std::size_t> members;
      for (std::size_t h = 0; h < count; ++h) {
        if (h == a || h == b || integer_rank({normals[a], normals[b], normals[h]}) == 2) members.push_back(h);
      }
      for (auto x : members)
        for (auto y : members) covered[x * count + y] = true;
      ++flats;
    }
  }
  return flats;
}

// --- conjecture ------------------------------------------------------------

bool ConjectureReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.pass && r.within_twice_l2; });
}

std::vector<Element> ConjectureReport::floor_only() const {
  std::vector<Element> out;
  for (const auto& r : rows)
    if (!r.pass && r.passes_with_floor) out.push_back(r.w);
  return out;
}

ConjectureReport conjecture_check(const GroupSpec& spec, const ConjectureOptions& options) {
  auto elements = all_elements(spec);
  const int divisor = spec.family() == Family::A ? 2 : 3;
  for (const auto& w : elements) {
    auto words = count_words(w);
    if (words > options.vertex_budget) {
      throw BudgetExceeded("element " + w.to_string() + " of " + spec.name() + " has " + std::to_string(words) +
                           " reduced words, above the vertex budget of " + std::to_string(options.vertex_budget));
    }
  }

  ConjectureReport report{spec, std::vector<ConjectureRow>(elements.size(), ConjectureRow{elements[0]}), {}, {}};
  std::mutex progress_mutex;
  std::size_t done = 0;
  detail::parallel_for(elements.size(), options.workers, [&](unsigned, std::size_t k) {
    const auto& w = elements[k];
    auto g = build_graph(w, BuildOptions{options.vertex_budget, 1});
    ConjectureRow row{w};
    row.word_count = g.vertex_count();
    row.diameter = diameter_all_pairs(g, 1);
    row.l2 = g.l2().count();
    row.lower = (row.l2 + divisor - 1) / divisor;
    row.upper = row.l2;
    row.pass = row.lower <= row.diameter && row.diameter <= row.upper;
    row.passes_with_floor = row.l2 / divisor <= row.diameter && row.diameter <= row.upper;
    row.within_twice_l2 = row.diameter <= 2 * row.l2;
    report.rows[k] = std::move(row);
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(++done, elements.size());
    }
  });

  for (const auto& row : report.rows) {
    if (row.l2 == 0) continue;
    RatioWitness rw{row.w, row.diameter, row.l2};
    // Ties keep the smallest element.
    if (!report.min_ratio || rw.ratio() < report.min_ratio->ratio()) report.min_ratio = rw;
    if (!report.max_ratio || rw.ratio() > report.max_ratio->ratio()) report.max_ratio = rw;
  }
  return report;
}

std::string to_text(const ConjectureReport& report) {
  std::ostringstream out;
  const char* frac = report.spec.family() == Family::A ? "ceil(|L2|/2)" : "ceil(|L2|/3)";
  out << "conjecture check for " << report.spec.name() << ": " << frac << " <= diameter <= |L2|\n";
  out << std::left << std::setw(24) << "w" << std::right << std::setw(10) << "|R(w)|" << std::setw(10) << "diameter"
      << std::setw(8) << "|L2|" << std::setw(8) << "lower" << std::setw(8) << "upper" << "  result\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(24) << r.w.to_string() << std::right << std::setw(10) << r.word_count
        << std::setw(10) << r.diameter << std::setw(8) << r.l2 << std::setw(8) << r.lower << std::setw(8) << r.upper
        << "  " << (r.pass ? "pass" : (r.passes_with_floor ? "FAIL (passes with floor)" : "FAIL"))
        << (r.within_twice_l2 ? "" : " (exceeds 2|L2|)") << "\n";
  }
  auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const ConjectureRow& r) { return r.pass; });
  out << passed << "/" << report.rows.size() << " elements pass\n";
  auto witness = [&](const char* label, const std::optional<RatioWitness>& rw) {
    if (!rw) return;
    out << label << " diameter/|L2| = " << rw->diameter << "/" << rw->l2 << " = " << std::setprecision(4)
        << rw->ratio() << " at w = " << rw->w.to_string() << "\n";
  };
  witness("min", report.min_ratio);
  witness("max", report.max_ratio);
  return out.str();
}

std::string to_json_lines(const ConjectureReport& report) {
  std::ostringstream out;
  auto spec_json = nlohmann::json{{"family", report.spec.family() == Family::A ? "A" : "B"}, {"n", report.spec.n()}};
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"spec", spec_json},
                          {"w", r.w.to_string()},
                          {"words", r.word_count},
                          {"diameter", r.diameter},
                          {"l2", r.l2},
                          {"lower", r.lower},
                          {"upper", r.upper},
                          {"pass", r.pass},
                          {"passesWithFloor", r.passes_with_floor},
                          {"withinTwiceL2", r.within_twice_l2}};
    out << row.dump() << "\n";
  }
  auto witness = [](const std::optional<RatioWitness>& rw) -> nlohmann::json {
    if (!rw) return nullptr;
    return {{"w", rw->w.to_string()}, {"diameter", rw->diameter}, {"l2", rw->l2}};
  };
  nlohmann::json summary = {{"summary", true},
                            {"spec", spec_json},
                            {"elements", report.rows.size()},
                            {"allPass", report.all_pass()},
                            {"minRatio", witness(report.min_ratio)},
                            {"maxRatio", witness(report.max_ratio)}};
  out << summary.dump() << "\n";
  return out.str();
}

}  // namespace rwg
