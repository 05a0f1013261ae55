#include <algorithm>
#include <map>
#include <set>

#include "brace/brace.hpp"
#include "brace/error.hpp"

namespace brace {

namespace {

void partitions(int e, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(e, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(e - k, k, cur, out);
    cur.pop_back();
  }
}

// Invariant-factor lists of all abelian groups of order n.
std::vector<IntVector> abelian_types(int n) {
  std::vector<std::pair<int, int>> pe;
  for (int p : prime_divisors(n)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pe.emplace_back(p, e);
  }
  std::vector<IntVector> types{IntVector{}};
  for (auto [p, e] : pe) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<IntVector> next;
    for (const auto& t : types)
      for (const auto& part : parts) {
        // largest parts go to the last invariant factors
        std::size_t len = std::max(t.size(), part.size());
        IntVector f(len, Integer(1));
        for (std::size_t i = 0; i < t.size(); ++i) f[len - t.size() + i] = t[i];
        for (std::size_t i = 0; i < part.size(); ++i) {
          Integer q = 1;
          for (int k = 0; k < part[i]; ++k) q *= p;
          f[len - 1 - i] *= q;
        }
        next.push_back(f);
      }
    types = std::move(next);
  }
  for (auto& t : types) t.erase(std::remove(t.begin(), t.end(), Integer(1)), t.end());
  return types;
}

struct LambdaSearch {
  const CayleyTable& add;
  const std::vector<Perm>& auts;
  std::vector<std::vector<int>> mult;
  std::vector<int> lam;
  std::vector<FiniteBrace> found;

  LambdaSearch(const CayleyTable& a, const std::vector<Perm>& au) : add(a), auts(au) {
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
    mult.assign(auts.size(), std::vector<int>(auts.size()));
    for (std::size_t i = 0; i < auts.size(); ++i)
      for (std::size_t j = 0; j < auts.size(); ++j) mult[i][j] = index.at(compose(auts[i], auts[j]));
    lam.assign(static_cast<std::size_t>(add.n), -1);
  }

  // lambda_{a + lambda_a(b)} = lambda_a lambda_b over all assigned a, b
  bool propagate(std::vector<int>& trail) {
    const int n = add.n;
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        const int la = lam[static_cast<std::size_t>(a)];
        if (la < 0) continue;
        for (int b = 0; b < n; ++b) {
          const int lb = lam[static_cast<std::size_t>(b)];
          if (lb < 0) continue;
          const int c = add(a, auts[static_cast<std::size_t>(la)][static_cast<std::size_t>(b)]);
          const int req = mult[static_cast<std::size_t>(la)][static_cast<std::size_t>(lb)];
          int& lc = lam[static_cast<std::size_t>(c)];
          if (lc < 0) {
            lc = req;
            trail.push_back(c);
            changed = true;
          } else if (lc != req) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void run() {
    const int n = add.n;
    auto it = std::find(lam.begin(), lam.end(), -1);
    if (it == lam.end()) {
      CayleyTable circ(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          circ.at(a, b) = add(a, auts[static_cast<std::size_t>(lam[static_cast<std::size_t>(a)])][static_cast<std::size_t>(b)]);
      found.push_back(canonical_form(FiniteBrace(add, circ)));
      return;
    }
    const auto a = static_cast<std::size_t>(it - lam.begin());
    for (std::size_t k = 0; k < auts.size(); ++k) {
      std::vector<int> trail;
      lam[a] = static_cast<int>(k);
      if (propagate(trail)) run();
      for (int c : trail) lam[static_cast<std::size_t>(c)] = -1;
      lam[a] = -1;
    }
  }
};

}  // namespace

FiniteBrace canonical_form(const FiniteBrace& e) {
  AbelianDecomposition dec = decompose_abelian(e.add_table());
  const int n = e.order();
  CayleyTable add = canonical_addition_table(dec.group);
  CayleyTable best;
  for (const Perm& alpha : additive_automorphisms(dec.group, n)) {
    // x -> alpha(to_canonical(x))
    CayleyTable circ(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ia = alpha[dec.to_canonical[static_cast<std::size_t>(a)]];
        const int ib = alpha[dec.to_canonical[static_cast<std::size_t>(b)]];
        circ.at(ia, ib) = alpha[dec.to_canonical[static_cast<std::size_t>(e.circ(a, b))]];
      }
    if (best.n == 0 || circ.data < best.data) best = std::move(circ);
  }
  return FiniteBrace::unchecked(std::move(add), std::move(best), e.name());
}

std::vector<FiniteBrace> enumerate_braces(int n, int bound) {
  if (n < 1) throw std::invalid_argument("enumerate_braces: n >= 1");
  if (n > bound)
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
  if (n == 1) return {FiniteBrace::trivial_cyclic(1)};
  std::vector<FiniteBrace> all;
  for (const IntVector& type : abelian_types(n)) {
    FgAbelianGroup g(type);
    CayleyTable add = canonical_addition_table(g);
    std::vector<Perm> auts = additive_automorphisms(g, n);
    LambdaSearch search(add, auts);
    search.lam[0] = static_cast<int>(std::find(auts.begin(), auts.end(), identity_perm(n)) - auts.begin());
    search.run();
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (auto& b : search.found)
      if (seen.insert({b.add_table().data, b.circ_table().data}).second) all.push_back(std::move(b));
  }
  std::sort(all.begin(), all.end(), [](const FiniteBrace& x, const FiniteBrace& y) {
    if (x.add_table().data != y.add_table().data) return x.add_table().data < y.add_table().data;
    return x.circ_table().data < y.circ_table().data;
  });
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i].set_name("brace " + std::to_string(n) + "." + std::to_string(i + 1));
  return all;
}

}  // namespace brace
