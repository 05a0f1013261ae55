#pragma once

// Brute-force checks written directly against the definitions, used to
// derive and freeze the expected values in the unit and acceptance tests.
// Nothing here goes through the Smith form or the library's differentials.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "brace/brace.hpp"
#include "brace/action.hpp"
#include "brace/cochain.hpp"

namespace testing_oracle {

using brace::CayleyTable;
using brace::Perm;

inline bool is_group(const CayleyTable& t) {
  const int n = t.n;
  for (int a = 0; a < n; ++a) {
    if (t(0, a) != a || t(a, 0) != a) return false;
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[t(a, b)] = 1;
      col[t(b, a)] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != n || std::count(col.begin(), col.end(), 1) != n) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

inline bool is_brace(const CayleyTable& add, const CayleyTable& circ) {
  const int n = add.n;
  if (!is_group(add) || !is_group(circ)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return false;
      for (int c = 0; c < n; ++c)
        if (add(circ(a, add(b, c)), a) != add(circ(a, b), circ(a, c))) return false;
    }
  return true;
}

inline bool isomorphic_via(const CayleyTable& a1, const CayleyTable& c1, const CayleyTable& a2, const CayleyTable& c2,
                           const Perm& f) {
  for (int x = 0; x < a1.n; ++x)
    for (int y = 0; y < a1.n; ++y)
      if (f[a1(x, y)] != a2(f[x], f[y]) || f[c1(x, y)] != c2(f[x], f[y])) return false;
  return true;
}

// Left braces of order n up to isomorphism, by trying every operation table
// on n points (n <= 4), for every additive table.
inline int count_braces(int n) {
  std::vector<CayleyTable> adds;
  // all abelian group tables on {0..n-1} with identity 0
  const int free = (n - 1) * (n - 1);
  long long total = 1;
  for (int k = 0; k < free; ++k) total *= n;
  auto table_from = [&](long long code) {
    CayleyTable t(n);
    for (int a = 0; a < n; ++a) {
      t.at(a, 0) = a;
      t.at(0, a) = a;
    }
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        t.at(a, b) = static_cast<int>(code % n);
        code /= n;
      }
    return t;
  };
  std::vector<CayleyTable> groups;
  for (long long code = 0; code < total; ++code) {
    CayleyTable t = table_from(code);
    if (is_group(t)) groups.push_back(t);
  }
  for (const auto& g : groups) {
    bool ab = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) ab = ab && g(a, b) == g(b, a);
    if (ab) adds.push_back(g);
  }
  std::vector<std::pair<CayleyTable, CayleyTable>> braces;
  for (const auto& a : adds)
    for (const auto& c : groups)
      if (is_brace(a, c)) braces.push_back({a, c});
  // classes under relabellings fixing 0
  std::vector<char> used(braces.size(), 0);
  int classes = 0;
  Perm f(n);
  for (std::size_t i = 0; i < braces.size(); ++i) {
    if (used[i]) continue;
    ++classes;
    for (std::size_t j = i; j < braces.size(); ++j) {
      if (used[j]) continue;
      for (int k = 0; k < n; ++k) f[k] = k;
      do {
        if (isomorphic_via(braces[i].first, braces[i].second, braces[j].first, braces[j].second, f)) {
          used[j] = 1;
          break;
        }
      } while (std::next_permutation(f.begin() + 1, f.end()));
    }
  }
  return classes;
}

inline std::vector<Perm> automorphisms(const brace::FiniteBrace& e) {
  const int n = e.order();
  Perm f(n);
  for (int k = 0; k < n; ++k) f[k] = k;
  std::vector<Perm> out;
  do
    if (isomorphic_via(e.add_table(), e.circ_table(), e.add_table(), e.circ_table(), f)) out.push_back(f);
  while (std::next_permutation(f.begin(), f.end()));
  return out;
}

// Tables of the brace built from an action pair and a (beta, tau), written
// from the defining operations on H x I.
inline std::pair<CayleyTable, CayleyTable> extension_tables(const brace::ActionPair& a, const brace::Cochain& beta,
                                                            const brace::Cochain& tau) {
  const int n = a.H.order(), m = a.I.order();
  CayleyTable add(n * m), circ(n * m);
  for (int h1 = 0; h1 < n; ++h1)
    for (int y1 = 0; y1 < m; ++y1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int y2 = 0; y2 < m; ++y2) {
          const int hh = a.H.circ(h1, h2);
          // nu_{h1 o h2} sigma_{h2} nu_{h1}^{-1}(y1)
          int pre = -1;
          for (int z = 0; z < m; ++z)
            if (a.nu_of(h1, z) == y1) pre = z;
          const int moved = a.nu_of(hh, a.sigma_of(h2, pre));
          add.at(h1 * m + y1, h2 * m + y2) = a.H.add(h1, h2) * m + a.I.add(a.I.add(y1, y2), beta(h1, h2));
          circ.at(h1 * m + y1, h2 * m + y2) = hh * m + a.I.add(a.I.add(moved, a.nu_of(h1, y2)), tau(h1, h2));
        }
  return {add, circ};
}

enum class Part { Both, Beta, Tau };

// Every normalized pair with beta symmetric, over all of I^(free entries).
// Beta or Tau keeps the other half at zero. Only feasible for tiny H.
inline void for_each_normalized_pair(int n, int m, const std::function<void(const brace::Cocycle2&)>& f,
                                     Part part = Part::Both) {
  std::vector<std::pair<int, int>> bcells, tcells;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      if (x <= y && part != Part::Tau) bcells.push_back({x, y});
      if (part != Part::Beta) tcells.push_back({x, y});
    }
  const std::size_t cells = bcells.size() + tcells.size();
  std::vector<int> digit(cells, 0);
  while (true) {
    brace::Cocycle2 c = brace::Cocycle2::zero(n);
    for (std::size_t k = 0; k < bcells.size(); ++k) {
      c.beta.set(bcells[k].first, bcells[k].second) = digit[k];
      c.beta.set(bcells[k].second, bcells[k].first) = digit[k];
    }
    for (std::size_t k = 0; k < tcells.size(); ++k) c.tau.set(tcells[k].first, tcells[k].second) = digit[bcells.size() + k];
    f(c);
    std::size_t pos = 0;
    while (pos < cells && ++digit[pos] == m) digit[pos++] = 0;
    if (pos == cells) break;
  }
}

// Every normalized theta: H -> I.
inline std::vector<brace::Cochain> all_thetas(int n, int m) {
  std::vector<brace::Cochain> out;
  std::vector<int> digit(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    brace::Cochain t(1, n);
    for (int h = 1; h < n; ++h) t.set(h) = digit[static_cast<std::size_t>(h - 1)];
    out.push_back(t);
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == m) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  return out;
}

// (g, f) from theta, straight from the definitions of the two defects of the
// section h -> (h, theta(h)).
inline brace::Cocycle2 coboundary(const brace::ActionPair& a, const brace::Cochain& theta) {
  const int n = a.H.order(), m = a.I.order();
  brace::Cochain beta(2, n), tau(2, n);
  auto [add, circ] = extension_tables(a, brace::Cochain(2, n), brace::Cochain(2, n));
  auto s = [&](int h) { return h * m + theta(h); };
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2) {
      // s(h1) + s(h2) - s(h1 + h2) and s(h1) o s(h2) - s(h1 o h2), read in I
      auto minus = [&](int e, int f) {
        for (int z = 0; z < n * m; ++z)
          if (add(z, f) == e) return z;
        return -1;
      };
      beta.set(h1, h2) = minus(add(s(h1), s(h2)), s(a.H.add(h1, h2))) % m;
      tau.set(h1, h2) = minus(circ(s(h1), s(h2)), s(a.H.circ(h1, h2))) % m;
    }
  return {beta, tau};
}

// Some normalized t: H -> I with f1 - f2 = sigma_{g2} t(g1) + t(g2) - t(g1 g2), if any.
inline bool group_cohomologous(const brace::ActionPair& a, const brace::Cochain& f1, const brace::Cochain& f2) {
  const int n = a.H.order();
  for (const auto& t : all_thetas(n, a.I.order())) {
    bool ok = true;
    for (int g1 = 0; g1 < n && ok; ++g1)
      for (int g2 = 0; g2 < n && ok; ++g2) {
        const int d = a.I.sub(a.I.add(a.sigma_of(g2, t(g1)), t(g2)), t(a.H.circ(g1, g2)));
        ok = a.I.sub(f1(g1, g2), f2(g1, g2)) == d;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace testing_oracle
