#pragma once

// Brute-force reference implementations. Nothing here calls into the library;
// words are digit strings, elements are plain vectors, hyperplanes are normal
// vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Vec = std::vector<long long>;

inline Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline Perm act(Perm p, const std::string& word) {
  for (char c : word) {
    int g = c - '0';
    if (g == 0) {
      p[0] = -p[0];
    } else {
      std::swap(p[static_cast<std::size_t>(g - 1)], p[static_cast<std::size_t>(g)]);
    }
  }
  return p;
}

inline Perm product(int n, const std::string& word) { return act(identity(n), word); }

// inv + nsp, the usual B_n statistic. Reduces to inversions for positive perms.
inline int length(const Perm& p) {
  int len = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) ++len;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++len;
      if (p[i] + p[j] < 0) ++len;
    }
  }
  return len;
}

inline bool reduced(int n, const std::string& word) {
  return length(product(n, word)) == static_cast<int>(word.size());
}

// All words reachable from start by braid relations, as digit strings.
struct Closure {
  std::set<std::string> words;
  std::set<std::pair<std::string, std::string>> edges;  // first < second
};

inline std::vector<std::string> rewrites(const std::string& r, bool type_b) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k + 1 < r.size(); ++k) {
    int a = r[k] - '0';
    int b = r[k + 1] - '0';
    if (std::abs(a - b) >= 2) {
      auto s = r;
      std::swap(s[k], s[k + 1]);
      out.push_back(s);
    }
    if (k + 2 < r.size() && r[k + 2] == r[k] && std::abs(a - b) == 1 && a != 0 && b != 0) {
      auto s = r;
      s[k] = s[k + 2] = r[k + 1];
      s[k + 1] = r[k];
      out.push_back(s);
    }
    if (type_b && k + 3 < r.size() && std::abs(a - b) == 1 && (a == 0 || b == 0) && r[k + 2] == r[k] &&
        r[k + 3] == r[k + 1]) {
      auto s = r;
      std::swap(s[k], s[k + 1]);
      std::swap(s[k + 2], s[k + 3]);
      out.push_back(s);
    }
  }
  return out;
}

inline Closure rewrite_closure(const std::string& start, bool type_b) {
  Closure c;
  std::queue<std::string> todo;
  c.words.insert(start);
  todo.push(start);
  while (!todo.empty()) {
    auto r = todo.front();
    todo.pop();
    for (auto& s : rewrites(r, type_b)) {
      c.edges.insert(r < s ? std::pair{r, s} : std::pair{s, r});
      if (c.words.insert(s).second) todo.push(s);
    }
  }
  return c;
}

// One reduced word of p, found by repeatedly peeling a right descent.
inline std::string some_reduced_word(Perm p) {
  std::string word;
  while (true) {
    int len = length(p);
    if (len == 0) break;
    bool found = false;
    for (int g = 0; g < static_cast<int>(p.size()) && !found; ++g) {
      auto q = act(p, std::string(1, static_cast<char>('0' + g)));
      // s_0 lengthens any perm with p[0] > 0, so type A words never get a 0
      if (length(q) < len) {
        word.insert(word.begin(), static_cast<char>('0' + g));
        p = q;
        found = true;
      }
    }
  }
  return word;
}

inline std::vector<Perm> all_perms(int n, bool signed_perms) {
  std::vector<Perm> out;
  auto p = identity(n);
  do {
    if (!signed_perms) {
      out.push_back(p);
      continue;
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto q = p;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) q[static_cast<std::size_t>(i)] = -q[static_cast<std::size_t>(i)];
      out.push_back(q);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::string to_string(const Perm& p) {
  bool compact = std::all_of(p.begin(), p.end(), [](int x) { return x > 0 && x < 10; });
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

// --- counting -------------------------------------------------------------

inline std::uint64_t factorial_ratio(int cells, const std::vector<int>& hooks) {
  // cells! / prod(hooks), computed with prime cancellation to stay exact.
  std::map<int, int> exps;
  auto add = [&](int x, int sign) {
    for (int p = 2; x > 1; ++p) {
      while (x % p == 0) {
        exps[p] += sign;
        x /= p;
      }
    }
  };
  for (int k = 2; k <= cells; ++k) add(k, 1);
  for (int h : hooks) add(h, -1);
  std::uint64_t out = 1;
  for (auto [p, e] : exps)
    for (int k = 0; k < e; ++k) out *= static_cast<std::uint64_t>(p);
  return out;
}

// Standard Young tableaux of the staircase (n-1, ..., 1): the reduced words of w0 in S_n.
inline std::uint64_t staircase_syt(int n) {
  std::vector<int> hooks;
  int rows = n - 1;
  for (int i = 0; i < rows; ++i) {
    int len = rows - i;
    for (int j = 0; j < len; ++j) {
      int arm = len - j - 1;
      int leg = rows - j - 1 - i;
      hooks.push_back(arm + leg + 1);
    }
  }
  return factorial_ratio(n * (n - 1) / 2, hooks);
}

// SYT of the n x n square: the reduced words of w0 in B_n.
inline std::uint64_t square_syt(int n) {
  std::vector<int> hooks;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) hooks.push_back(i + j - 1);
  return factorial_ratio(n * n, hooks);
}

// --- geometry -------------------------------------------------------------

inline int rank(std::vector<Vec> rows) {
  // Fraction-free elimination; entries stay small for root vectors.
  int r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows.size(); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
    const auto& p = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      long long f = rows[i][c];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * p[c] - p[j] * f;
    }
    ++r;
  }
  return r;
}

// Sign-normalised: first nonzero entry positive.
inline Vec normalise(Vec v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

inline std::vector<Vec> roots(int n, bool type_b) {
  std::vector<Vec> out;
  auto n_ = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < n_; ++i) {
    if (type_b) {
      Vec v(n_, 0);
      v[i] = 1;
      out.push_back(v);
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      Vec v(n_, 0);
      v[i] = 1;
      v[j] = -1;
      out.push_back(v);
      if (type_b) {
        v[j] = 1;
        out.push_back(v);
      }
    }
  }
  for (auto& v : out) v = normalise(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Rank-two flats as sets of root indices into roots(n, type_b).
inline std::set<std::vector<int>> flats(int n, bool type_b) {
  auto rs = roots(n, type_b);
  std::set<std::vector<int>> out;
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = a + 1; b < rs.size(); ++b) {
      std::vector<int> members;
      for (std::size_t h = 0; h < rs.size(); ++h)
        if (rank({rs[a], rs[b], rs[h]}) == 2) members.push_back(static_cast<int>(h));
      out.insert(members);
    }
  }
  return out;
}

// Crossed hyperplanes in order, as normalised normals: the k-th crossing is
// prefix(alpha_{i_k}), with the signed permutation acting on basis vectors.
inline std::vector<Vec> crossings(int n, const std::string& word) {
  auto n_ = static_cast<std::size_t>(n);
  std::vector<Vec> out;
  auto u = identity(n);
  for (char c : word) {
    int g = c - '0';
    Vec alpha(n_, 0);
    if (g == 0) {
      alpha[0] = 1;
    } else {
      alpha[static_cast<std::size_t>(g - 1)] = -1;
      alpha[static_cast<std::size_t>(g)] = 1;
    }
    Vec beta(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!alpha[j]) continue;
      int img = u[j];
      beta[static_cast<std::size_t>(std::abs(img) - 1)] += alpha[j] * (img < 0 ? -1 : 1);
    }
    out.push_back(normalise(beta));
    u = act(u, std::string(1, c));
  }
  return out;
}

// Separation set of two reduced words of the same element: geometric flats
// that are fully crossed and whose members are crossed in different orders.
inline std::set<std::vector<int>> separation(int n, bool type_b, const std::string& r1, const std::string& r2) {
  auto rs = roots(n, type_b);
  auto index = [&](const Vec& v) {
    return static_cast<int>(std::lower_bound(rs.begin(), rs.end(), v) - rs.begin());
  };
  auto pos = [&](const std::string& r) {
    std::map<int, int> p;
    auto cs = crossings(n, r);
    for (std::size_t k = 0; k < cs.size(); ++k) p[index(cs[k])] = static_cast<int>(k);
    return p;
  };
  auto p1 = pos(r1);
  auto p2 = pos(r2);
  std::set<std::vector<int>> out;
  for (const auto& f : flats(n, type_b)) {
    bool inverted = std::all_of(f.begin(), f.end(), [&](int h) { return p1.count(h) > 0; });
    if (!inverted) continue;
    auto order = [&](std::map<int, int>& p) {
      auto m = f;
      std::sort(m.begin(), m.end(), [&](int a, int b) { return p[a] < p[b]; });
      return m;
    };
    if (order(p1) != order(p2)) out.insert(f);
  }
  return out;
}

}  // namespace oracle
