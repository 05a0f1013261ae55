#include "brace/action.hpp"

#include <algorithm>

#include "brace/error.hpp"

namespace brace {

Module::Module(FgAbelianGroup g) : group_(std::move(g)) {
  add_ = canonical_addition_table(group_);
  const int n = add_.n;
  coords_.resize(static_cast<std::size_t>(n));
  neg_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    coords_[static_cast<std::size_t>(a)] = group_.coordinates(static_cast<std::size_t>(a));
    for (int b = 0; b < n; ++b)
      if (add_(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
  }
  for (std::size_t j = 0; j < group_.rank(); ++j) {
    IntVector e(group_.rank(), Integer(0));
    e[j] = 1;
    generators_.push_back(static_cast<int>(group_.index_of(e)));
  }
}

int Module::scale(long long k, int a) const {
  const long long m = order();
  k %= m;
  if (k < 0) k += m;
  int r = 0;
  for (long long i = 0; i < k; ++i) r = add(r, a);
  return r;
}

bool Module::is_additive(const Perm& f) const {
  if (f.size() != static_cast<std::size_t>(order())) return false;
  for (int x : f)
    if (x < 0 || x >= order()) return false;
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (f[static_cast<std::size_t>(add(a, b))] != add(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

IntMatrix Module::matrix_of(const Perm& f) const {
  const std::size_t r = group_.rank();
  IntMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const IntVector& img = coordinates(f[static_cast<std::size_t>(generators_[j])]);
    for (std::size_t i = 0; i < r; ++i) m(i, j) = img[i];
  }
  return m;
}

bool ActionPair::is_trivial() const {
  const Perm id = identity_perm(I.order());
  return std::all_of(nu.begin(), nu.end(), [&](const Perm& p) { return p == id; }) &&
         std::all_of(sigma.begin(), sigma.end(), [&](const Perm& p) { return p == id; });
}

ActionPair trivial_actions(const FiniteBrace& h, const Module& i) {
  ActionPair a;
  a.H = h;
  a.I = i;
  a.nu.assign(static_cast<std::size_t>(h.order()), identity_perm(i.order()));
  a.sigma = a.nu;
  return a;
}

Report verify_action_pair(const ActionPair& a) {
  Report r;
  const int n = a.H.order();
  const int m = a.I.order();
  for (const auto* tab : {&a.nu, &a.sigma}) {
    const std::string tag = tab == &a.nu ? "nu" : "sigma";
    if (tab->size() != static_cast<std::size_t>(n)) {
      r.failures.push_back({tag + ".shape", {static_cast<int>(tab->size())}});
      return r;
    }
    for (int h = 0; h < n; ++h) {
      const Perm& p = (*tab)[static_cast<std::size_t>(h)];
      if (p.size() != static_cast<std::size_t>(m) || !is_permutation(p)) {
        r.failures.push_back({tag + ".bijective", {h}});
        return r;
      }
    }
  }
  const Perm id = identity_perm(m);
  if (a.nu[0] != id) r.failures.push_back({"nu.identity", {0}});
  if (a.sigma[0] != id) r.failures.push_back({"sigma.identity", {0}});
  for (int h = 0; h < n; ++h)
    if (!a.I.is_additive(a.nu[static_cast<std::size_t>(h)])) {
      r.failures.push_back({"nu.additive", {h}});
      break;
    }
  for (int h = 0; h < n; ++h)
    if (!a.I.is_additive(a.sigma[static_cast<std::size_t>(h)])) {
      r.failures.push_back({"sigma.additive", {h}});
      break;
    }
  // nu_{h1 o h2} = nu_{h1} nu_{h2}, sigma_{h1 o h2} = sigma_{h2} sigma_{h1}
  bool nu_ok = true, sigma_ok = true;
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2) {
      const auto hh = static_cast<std::size_t>(a.H.circ(h1, h2));
      const auto i1 = static_cast<std::size_t>(h1), i2 = static_cast<std::size_t>(h2);
      if (nu_ok && a.nu[hh] != compose(a.nu[i1], a.nu[i2])) {
        r.failures.push_back({"nu.homomorphism", {h1, h2}});
        nu_ok = false;
      }
      if (sigma_ok && a.sigma[hh] != compose(a.sigma[i2], a.sigma[i1])) {
        r.failures.push_back({"sigma.antihomomorphism", {h1, h2}});
        sigma_ok = false;
      }
    }
  return r;
}

GoodPairResult is_good_pair(const ActionPair& a) {
  Report r = verify_action_pair(a);
  if (!r.ok()) throw Error(ErrorCode::InvalidActionPair, r.failures.front().to_string());
  const int n = a.H.order();
  const int m = a.I.order();
  auto ns = [&](int h, int y) { return a.nu_of(h, a.sigma_of(h, y)); };
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2) {
      const int hs = a.H.add(h1, h2);
      for (int y = 0; y < m; ++y)
        if (a.I.add(ns(hs, y), y) != a.I.add(ns(h1, y), ns(h2, y))) return {false, std::array<int, 3>{h1, h2, y}};
    }
  return {};
}

void require_good_pair(const ActionPair& a) {
  GoodPairResult g = is_good_pair(a);
  if (!g.good) {
    const auto& w = *g.witness;
    throw Error(ErrorCode::NotGoodPair, "good-pair condition fails at (h1, h2, y) = (" + std::to_string(w[0]) + ", " +
                                            std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")");
  }
}

ActionPair twist_module(const ActionPair& a, const Perm& phi) {
  if (!is_permutation(phi) || !is_brace_morphism(a.H, a.H, phi))
    throw Error(ErrorCode::NotAnAutomorphism, "phi is not a brace automorphism of H");
  ActionPair t = a;
  for (int h = 0; h < a.H.order(); ++h) {
    t.nu[static_cast<std::size_t>(h)] = a.nu[static_cast<std::size_t>(phi[static_cast<std::size_t>(h)])];
    t.sigma[static_cast<std::size_t>(h)] = a.sigma[static_cast<std::size_t>(phi[static_cast<std::size_t>(h)])];
  }
  return t;
}

bool is_compatible_pair(const Perm& alpha, const Perm& zeta, const ActionPair& a, const ActionPair& ap) {
  if (alpha.size() != static_cast<std::size_t>(ap.H.order()) || zeta.size() != static_cast<std::size_t>(a.I.order()))
    return false;
  for (int hp = 0; hp < ap.H.order(); ++hp) {
    const int h = alpha[static_cast<std::size_t>(hp)];
    for (int y = 0; y < a.I.order(); ++y) {
      const int zy = zeta[static_cast<std::size_t>(y)];
      if (zeta[static_cast<std::size_t>(a.nu_of(h, y))] != ap.nu_of(hp, zy)) return false;
      if (zeta[static_cast<std::size_t>(a.sigma_of(h, y))] != ap.sigma_of(hp, zy)) return false;
    }
  }
  return true;
}

ActionPair restrict_actions(const ActionPair& a, const std::vector<int>& k) {
  ActionPair r;
  r.H = sub_brace(a.H, k);
  r.I = a.I;
  std::vector<int> sorted = k;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int h : sorted) {
    r.nu.push_back(a.nu[static_cast<std::size_t>(h)]);
    r.sigma.push_back(a.sigma[static_cast<std::size_t>(h)]);
  }
  return r;
}

namespace {

// all maps h -> Aut(I) with f(a o b) = f(a) f(b) (left) or f(b) f(a) (right)
void action_search(const FiniteBrace& h, const std::vector<Perm>& aut, bool right, std::vector<Perm>& cur,
                   std::vector<std::vector<Perm>>& out) {
  const int n = h.order();
  const int k = static_cast<int>(cur.size());
  if (k == n) {
    out.push_back(cur);
    return;
  }
  for (const Perm& g : aut) {
    if (k == 0 && g != aut.front()) break;  // f(0) = id, and the identity sorts first
    cur.push_back(g);
    bool ok = true;
    for (int a = 0; a <= k && ok; ++a)
      for (int b = 0; b <= k && ok; ++b) {
        const int c = h.circ(a, b);
        if (c > k) continue;
        const Perm& fa = cur[static_cast<std::size_t>(a)];
        const Perm& fb = cur[static_cast<std::size_t>(b)];
        ok = cur[static_cast<std::size_t>(c)] == (right ? compose(fb, fa) : compose(fa, fb));
      }
    if (ok) action_search(h, aut, right, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ActionPair> enumerate_action_pairs(const FiniteBrace& h, const Module& i) {
  auto aut = additive_automorphisms(i.group());
  std::sort(aut.begin(), aut.end());
  std::vector<std::vector<Perm>> lefts, rights;
  std::vector<Perm> cur;
  action_search(h, aut, false, cur, lefts);
  action_search(h, aut, true, cur, rights);
  std::vector<ActionPair> out;
  for (const auto& nu : lefts)
    for (const auto& sigma : rights) out.push_back({h, i, nu, sigma, {}});
  return out;
}

}  // namespace brace
