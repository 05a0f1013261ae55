#include "brace/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

namespace brace::oracle {

namespace {

// Depth-first search over vars in [0, domain) with constraints checked as
// soon as their last variable is set.
struct Search {
  int vars = 0;
  int domain = 1;
  std::vector<std::vector<int>> checks_at;
  std::function<bool(int, const std::vector<int>&)> check;

  std::vector<std::vector<int>> run() const {
    std::vector<std::vector<int>> out;
    std::vector<int> val(static_cast<std::size_t>(vars), 0);
    std::function<void(int)> go = [&](int k) {
      if (k == vars) {
        out.push_back(val);
        return;
      }
      for (int x = 0; x < domain; ++x) {
        val[static_cast<std::size_t>(k)] = x;
        bool ok = true;
        for (int c : checks_at[static_cast<std::size_t>(k)])
          if (!check(c, val)) {
            ok = false;
            break;
          }
        if (ok) go(k + 1);
      }
    };
    go(0);
    return out;
  }
};

}  // namespace

std::vector<Cocycle2> cocycles(const ActionPair& a) {
  const FiniteBrace& H = a.H;
  const Module& I = a.I;
  const int n = H.order(), m = I.order();
  std::vector<Cocycle2> out;
  if (n == 1) return {Cocycle2::zero(1)};

  // beta variables: unordered nondegenerate pairs
  std::vector<std::vector<int>> bvar(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  int nb = 0;
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y) bvar[x][y] = bvar[y][x] = nb++;
  auto beta_at = [&](const std::vector<int>& val, int x, int y) {
    const int v = bvar[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    return v < 0 ? 0 : val[static_cast<std::size_t>(v)];
  };
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) triples.push_back({x, y, z});

  Search sb;
  sb.vars = nb;
  sb.domain = m;
  sb.checks_at.assign(static_cast<std::size_t>(nb), {});
  for (std::size_t t = 0; t < triples.size(); ++t) {
    auto [x, y, z] = triples[t];
    int last = -1;
    for (auto [p, q] : {std::pair{y, z}, {H.add(x, y), z}, {x, H.add(y, z)}, {x, y}})
      last = std::max(last, bvar[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
    if (last >= 0) sb.checks_at[static_cast<std::size_t>(last)].push_back(static_cast<int>(t));
  }
  sb.check = [&](int t, const std::vector<int>& val) {
    auto [x, y, z] = triples[static_cast<std::size_t>(t)];
    int v = I.sub(beta_at(val, y, z), beta_at(val, H.add(x, y), z));
    v = I.add(v, beta_at(val, x, H.add(y, z)));
    return I.sub(v, beta_at(val, x, y)) == 0;
  };
  const auto betas = sb.run();

  // tau variables: ordered nondegenerate pairs
  auto tvar = [&](int x, int y) { return x == 0 || y == 0 ? -1 : (x - 1) * (n - 1) + (y - 1); };
  auto tau_at = [&](const std::vector<int>& val, int x, int y) {
    const int v = tvar(x, y);
    return v < 0 ? 0 : val[static_cast<std::size_t>(v)];
  };
  std::vector<Perm> nu_inv;
  for (const auto& p : a.nu) nu_inv.push_back(inverse(p));
  Search st;
  st.vars = (n - 1) * (n - 1);
  st.domain = m;
  st.checks_at.assign(static_cast<std::size_t>(st.vars), {});
  for (std::size_t t = 0; t < triples.size(); ++t) {
    auto [x, y, z] = triples[t];
    int last = -1;
    for (auto [p, q] : {std::pair{y, z}, {H.circ(x, y), z}, {x, H.circ(y, z)}, {x, y}}) last = std::max(last, tvar(p, q));
    if (last >= 0) st.checks_at[static_cast<std::size_t>(last)].push_back(static_cast<int>(t));
  }
  st.check = [&](int t, const std::vector<int>& val) {
    auto [x, y, z] = triples[static_cast<std::size_t>(t)];
    int v = I.sub(a.nu_of(x, tau_at(val, y, z)), tau_at(val, H.circ(x, y), z));
    v = I.add(v, tau_at(val, x, H.circ(y, z)));
    const int xyz = H.circ(H.circ(x, y), z);
    const int last = a.nu_of(xyz, a.sigma_of(z, nu_inv[static_cast<std::size_t>(H.circ(x, y))][static_cast<std::size_t>(tau_at(val, x, y))]));
    return I.sub(v, last) == 0;
  };
  const auto taus = st.run();

  // mixed component: nu_x beta(y,z) - beta(xy, xz) + beta(x, x(y+z)) = tau(x,y) - tau(x,y+z) + tau(x,z)
  std::map<std::vector<int>, std::vector<std::size_t>> by_tau_side;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    std::vector<int> side(triples.size());
    for (std::size_t t = 0; t < triples.size(); ++t) {
      auto [x, y, z] = triples[t];
      side[t] = I.add(I.sub(tau_at(taus[k], x, y), tau_at(taus[k], x, H.add(y, z))), tau_at(taus[k], x, z));
    }
    by_tau_side[side].push_back(k);
  }
  for (const auto& b : betas) {
    std::vector<int> side(triples.size());
    for (std::size_t t = 0; t < triples.size(); ++t) {
      auto [x, y, z] = triples[t];
      int v = I.sub(a.nu_of(x, beta_at(b, y, z)), beta_at(b, H.circ(x, y), H.circ(x, z)));
      side[t] = I.add(v, beta_at(b, x, H.circ(x, H.add(y, z))));
    }
    auto it = by_tau_side.find(side);
    if (it == by_tau_side.end()) continue;
    for (std::size_t k : it->second) {
      Cocycle2 c = Cocycle2::zero(n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          c.beta.set(x, y) = beta_at(b, x, y);
          c.tau.set(x, y) = tau_at(taus[k], x, y);
        }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class F>
void for_each_theta(int n, int m, F&& f) {
  std::size_t total = 1;
  for (int k = 1; k < n; ++k) total *= static_cast<std::size_t>(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Cochain theta(1, n);
    std::size_t rest = idx;
    for (int h = n - 1; h >= 1; --h) {
      theta.set(h) = static_cast<int>(rest % static_cast<std::size_t>(m));
      rest /= static_cast<std::size_t>(m);
    }
    if (f(theta)) return;
  }
}

}  // namespace

std::vector<Cocycle2> coboundaries(const ActionPair& a) {
  std::set<Cocycle2> s;
  for_each_theta(a.H.order(), a.I.order(), [&](const Cochain& t) {
    s.insert(d1(a, t));
    return false;
  });
  return {s.begin(), s.end()};
}

std::optional<Cochain> coboundary_witness(const ActionPair& a, const Cocycle2& c) {
  std::optional<Cochain> found;
  for_each_theta(a.H.order(), a.I.order(), [&](const Cochain& t) {
    if (d1(a, t) == c) found = t;
    return found.has_value();
  });
  return found;
}

std::size_t h2_order(const ActionPair& a) { return cocycles(a).size() / coboundaries(a).size(); }

}  // namespace brace::oracle
