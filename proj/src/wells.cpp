#include "brace/wells.hpp"

#include <algorithm>
#include <set>

#include "brace/error.hpp"
#include "brace/general_complex.hpp"

namespace brace {

namespace {

bool is_h_automorphism(const FiniteBrace& h, const Perm& phi) {
  return phi.size() == static_cast<std::size_t>(h.order()) && is_permutation(phi) && is_brace_morphism(h, h, phi);
}

bool is_i_automorphism(const Module& i, const Perm& theta) {
  return theta.size() == static_cast<std::size_t>(i.order()) && is_permutation(theta) && i.is_additive(theta);
}

void require_automorphisms(const FiniteBrace& h, const Module& i, const CompatiblePair& p) {
  if (!is_h_automorphism(h, p.phi)) throw Error(ErrorCode::NotAutomorphisms, "phi is not a brace automorphism of H");
  if (!is_i_automorphism(i, p.theta)) throw Error(ErrorCode::NotAutomorphisms, "theta is not an automorphism of I");
}

bool conjugates(const std::vector<Perm>& act, const CompatiblePair& p) {
  const Perm tinv = inverse(p.theta);
  for (std::size_t h = 0; h < act.size(); ++h)
    if (act[h] != compose(tinv, compose(act[static_cast<std::size_t>(p.phi[h])], p.theta))) return false;
  return true;
}

std::vector<int> iota_inverse(const Extension& x) {
  std::vector<int> inv(static_cast<std::size_t>(x.E.order()), -1);
  for (std::size_t y = 0; y < x.iota.size(); ++y) inv[static_cast<std::size_t>(x.iota[y])] = static_cast<int>(y);
  return inv;
}

Cocycle2 restrict_cocycle(const FiniteBrace& h, const std::vector<int>& p, const Cocycle2& c) {
  return {restrict_cochain(h, p, c.beta), restrict_cochain(h, p, c.tau)};
}

}  // namespace

CompatiblePair compose(const CompatiblePair& a, const CompatiblePair& b) {
  return {brace::compose(a.phi, b.phi), brace::compose(a.theta, b.theta)};
}

CompatiblePair identity_pair(int h_order, int i_order) { return {identity_perm(h_order), identity_perm(i_order)}; }

bool is_automorphism_pair(const ActionPair& a, const CompatiblePair& p) {
  return is_h_automorphism(a.H, p.phi) && is_i_automorphism(a.I, p.theta);
}

bool is_compatible(const ActionPair& a, const CompatiblePair& p) {
  return is_automorphism_pair(a, p) && conjugates(a.nu, p) && conjugates(a.sigma, p);
}

std::vector<CompatiblePair> compatible_pairs(const ActionPair& a) {
  require_good_pair(a);
  const auto ah = brace_automorphisms(a.H);
  const auto ai = additive_automorphisms(a.I.group());
  std::vector<CompatiblePair> out;
  for (const auto& phi : ah)
    for (const auto& theta : ai) {
      CompatiblePair p{phi, theta};
      if (conjugates(a.nu, p) && conjugates(a.sigma, p)) out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Cochain act_on_cochain(const Cochain& f, const CompatiblePair& p) {
  const Perm tinv = inverse(p.theta);
  Cochain out(f.arity, f.h_order);
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    auto t = f.tuple(idx);
    for (int& h : t) h = p.phi[static_cast<std::size_t>(h)];
    out.values[idx] = tinv[static_cast<std::size_t>(f.at(t))];
  }
  return out;
}

Cocycle2 act_on_cocycle(const ActionPair& a, const Cocycle2& c, const CompatiblePair& p) {
  if (!is_compatible(a, p)) throw Error(ErrorCode::NotCompatible, "pair does not conjugate the actions into themselves");
  return {act_on_cochain(c.beta, p), act_on_cochain(c.tau, p)};
}

IntVector act_on_class(const SecondCohomology& h2, const IntVector& coords, const CompatiblePair& p) {
  return h2.class_of(act_on_cocycle(h2.actions(), h2.representative(coords), p));
}

Extension act_on_extension(const Extension& x, const CompatiblePair& p) {
  require_automorphisms(x.H, x.I, p);
  Extension y = x;
  const Perm phi_inv = inverse(p.phi);
  for (std::size_t k = 0; k < y.iota.size(); ++k) y.iota[k] = x.iota[static_cast<std::size_t>(p.theta[k])];
  for (auto& h : y.proj) h = phi_inv[static_cast<std::size_t>(h)];
  for (std::size_t h = 0; h < y.section.size(); ++h) y.section[h] = x.section[static_cast<std::size_t>(p.phi[h])];
  return y;
}

IntVector omega_of(const SecondCohomology& h2, const Cocycle2& c, const CompatiblePair& p) {
  const ActionPair& a = h2.actions();
  return h2.class_of(cocycle_sub(a.I, act_on_cocycle(a, c, p), c));
}

int WellsData::index_of(const CompatiblePair& p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || !(*it == p)) return -1;
  return static_cast<int>(it - pairs.begin());
}

std::vector<int> WellsData::kernel() const {
  std::vector<int> k;
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (std::all_of(omega[i].begin(), omega[i].end(), [](const Integer& v) { return v == 0; })) k.push_back(static_cast<int>(i));
  return k;
}

WellsData wells_map(const Extension& x) {
  Extracted ex = extract_cocycle(x);
  require_good_pair(ex.actions);
  SecondCohomology h2(ex.actions);
  auto pairs = compatible_pairs(ex.actions);
  WellsData w{x, ex, std::move(h2), std::move(pairs), {}, {}, false, false};
  const std::size_t n = w.pairs.size();
  for (const auto& p : w.pairs) w.omega.push_back(omega_of(w.h2, ex.cocycle, p));
  w.product.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int k = w.index_of(compose(w.pairs[i], w.pairs[j]));
      if (k < 0) throw std::logic_error("compatible pairs are not closed under composition");
      w.product[i][j] = k;
    }
  const CyclicSum cs = w.h2.structure().as_cyclic_sum();
  bool law = true, hom = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const IntVector& lhs = w.omega[static_cast<std::size_t>(w.product[i][j])];
      const IntVector moved = act_on_class(w.h2, w.omega[i], w.pairs[j]);
      if (lhs != cs.add(moved, w.omega[j])) law = false;
      if (lhs != cs.add(w.omega[i], w.omega[j])) hom = false;
    }
  w.derivation_law = law && std::all_of(w.omega.front().begin(), w.omega.front().end(), [](const Integer& v) { return v == 0; });
  w.omega_is_homomorphism = hom;
  return w;
}

CompatiblePair restrict_automorphism(const Extension& x, const Perm& gamma) {
  const auto inv = iota_inverse(x);
  CompatiblePair p;
  for (int y : x.iota) {
    const int img = inv[static_cast<std::size_t>(gamma[static_cast<std::size_t>(y)])];
    if (img < 0) throw Error(ErrorCode::DoesNotNormalizeIdeal, "gamma moves I off itself");
    p.theta.push_back(img);
  }
  for (int s : x.section) p.phi.push_back(x.proj[static_cast<std::size_t>(gamma[static_cast<std::size_t>(s)])]);
  return p;
}

AutbNormalizing autb_normalizing(const Extension& x, int bound) {
  const auto inv = iota_inverse(x);
  AutbNormalizing out;
  for (const Perm& g : brace_automorphisms(x.E, bound)) {
    bool keeps = std::all_of(x.iota.begin(), x.iota.end(), [&](int y) { return inv[static_cast<std::size_t>(g[static_cast<std::size_t>(y)])] >= 0; });
    if (!keeps) continue;
    out.autb_i.push_back(g);
    bool fixes_i = std::all_of(x.iota.begin(), x.iota.end(), [&](int y) { return g[static_cast<std::size_t>(y)] == y; });
    bool over_h = true;
    for (int e = 0; e < x.E.order() && over_h; ++e)
      over_h = x.proj[static_cast<std::size_t>(g[static_cast<std::size_t>(e)])] == x.proj[static_cast<std::size_t>(e)];
    if (fixes_i && over_h) out.kernel.push_back(g);
  }
  return out;
}

Perm eta(const Extension& x, const Cochain& lambda) {
  const auto inv = iota_inverse(x);
  const FiniteBrace& E = x.E;
  Perm g(static_cast<std::size_t>(E.order()));
  for (int e = 0; e < E.order(); ++e) {
    const int h = x.proj[static_cast<std::size_t>(e)];
    const int sh = x.section[static_cast<std::size_t>(h)];
    const int y = inv[static_cast<std::size_t>(E.sub(e, sh))];
    g[static_cast<std::size_t>(e)] = E.add(sh, x.iota[static_cast<std::size_t>(x.I.add(lambda(h), y))]);
  }
  return g;
}

Cochain zeta(const Extension& x, const Perm& gamma) {
  const auto inv = iota_inverse(x);
  Cochain out(1, x.H.order());
  for (int h = 0; h < x.H.order(); ++h) {
    const int sh = x.section[static_cast<std::size_t>(h)];
    const int y = inv[static_cast<std::size_t>(x.E.sub(gamma[static_cast<std::size_t>(sh)], sh))];
    if (y < 0) throw Error(ErrorCode::DoesNotNormalizeIdeal, "gamma does not cover the identity of H");
    out.set(h) = y;
  }
  return out;
}

EtaIsomorphism eta_isomorphism(const Extension& x, const AutbNormalizing& autb) {
  EtaIsomorphism r;
  r.derivations = FirstCohomology(actions_from_extension(x)).derivations();
  for (const auto& l : r.derivations) r.automorphisms.push_back(eta(x, l));
  r.homomorphism = true;
  for (const auto& l1 : r.derivations)
    for (const auto& l2 : r.derivations)
      if (eta(x, cochain_add(x.I, l1, l2)) != compose(eta(x, l1), eta(x, l2))) r.homomorphism = false;
  r.inverse = true;
  for (std::size_t k = 0; k < r.derivations.size(); ++k)
    if (!(zeta(x, r.automorphisms[k]) == r.derivations[k])) r.inverse = false;
  for (const auto& g : autb.kernel)
    if (eta(x, zeta(x, g)) != g) r.inverse = false;
  std::set<Perm> image(r.automorphisms.begin(), r.automorphisms.end());
  std::set<Perm> kernel(autb.kernel.begin(), autb.kernel.end());
  r.onto_kernel = image == kernel && image.size() == r.derivations.size();
  return r;
}

ModuleCriterion module_criterion(const Extension& x, const CompatiblePair& p) {
  Extracted ex = extract_cocycle(x);
  const ActionPair& a = ex.actions;
  ModuleCriterion m;
  m.bimodule_iso = is_compatible(a, p);
  if (!m.bimodule_iso) return m;
  ActionPair twisted = twist_module(a, p.phi);
  SecondCohomology h2(twisted);
  Cocycle2 by_phi{act_on_cochain(ex.cocycle.beta, {p.phi, identity_perm(a.I.order())}),
                  act_on_cochain(ex.cocycle.tau, {p.phi, identity_perm(a.I.order())})};
  Cocycle2 by_theta{cochain_map(p.theta, ex.cocycle.beta), cochain_map(p.theta, ex.cocycle.tau)};
  m.classes_equal = h2.cohomologous(by_phi, by_theta);
  return m;
}

Inducibility is_inducible(const Extension& x, const CompatiblePair& p) {
  Extracted ex = extract_cocycle(x);
  return is_inducible(x, p, SecondCohomology(ex.actions), autb_normalizing(x));
}

Inducibility is_inducible(const Extension& x, const CompatiblePair& p, const SecondCohomology& h2,
                          const AutbNormalizing& autb) {
  Extracted ex = extract_cocycle(x);
  if (!is_compatible(ex.actions, p)) throw Error(ErrorCode::NotCompatible, "pair is not in C_(nu,sigma)");
  Inducibility r;
  r.obstruction = omega_of(h2, ex.cocycle, p);
  r.by_omega = std::all_of(r.obstruction.begin(), r.obstruction.end(), [](const Integer& v) { return v == 0; });
  for (const auto& g : autb.autb_i)
    if (restrict_automorphism(x, g) == p) {
      r.witness = g;
      break;
    }
  r.by_search = r.witness.has_value();
  ModuleCriterion m = module_criterion(x, p);
  r.by_module = m.bimodule_iso && m.classes_equal;
  r.inducible = r.by_omega;
  return r;
}

ExactnessReport check_exactness(const WellsData& w, const AutbNormalizing& autb) {
  const Extension& x = w.extension;
  ExactnessReport r;
  const CompatiblePair id = identity_pair(x.H.order(), x.I.order());
  std::set<Perm> ker_rho;
  for (const auto& g : autb.autb_i) {
    CompatiblePair p = restrict_automorphism(x, g);
    if (p == id) ker_rho.insert(g);
  }
  r.kernel_of_rho = ker_rho == std::set<Perm>(autb.kernel.begin(), autb.kernel.end());
  r.eta = eta_isomorphism(x, autb).ok();
  std::set<int> im_idx;
  bool inside = true;
  for (const auto& g : autb.autb_i) {
    const int k = w.index_of(restrict_automorphism(x, g));
    if (k < 0) inside = false;
    else im_idx.insert(k);
  }
  const auto kern = w.kernel();
  r.image_equals_kernel = inside && im_idx == std::set<int>(kern.begin(), kern.end());
  r.derivation_law = w.derivation_law;
  return r;
}

SylowVerdict sylow_reduction(const Extension& x, const CompatiblePair& p) {
  if (!splits_additively(x)) throw Error(ErrorCode::NotAdditivelySplit, "extension has no additive section");
  Extracted ex = extract_cocycle(x);
  SecondCohomology h2(ex.actions);
  const IntVector w = omega_of(h2, ex.cocycle, p);
  const Cocycle2 w_rep = h2.representative(w);
  SylowVerdict v;
  v.globally_inducible = is_inducible(x, p, h2, autb_normalizing(x)).inducible;
  v.all_primes_inducible = true;
  for (int q : prime_divisors(x.H.order())) {
    PrimeVerdict pv;
    pv.prime = q;
    pv.sylow = sylow_left_ideal(x.H, q).elements;
    std::vector<int> pos(static_cast<std::size_t>(x.H.order()), -1);
    for (std::size_t k = 0; k < pv.sylow.size(); ++k) pos[static_cast<std::size_t>(pv.sylow[k])] = static_cast<int>(k);
    for (int h : pv.sylow) {
      const int k = pos[static_cast<std::size_t>(p.phi[static_cast<std::size_t>(h)])];
      if (k < 0) throw Error(ErrorCode::SylowNotPreserved, "phi does not preserve the Sylow " + std::to_string(q) + "-left ideal");
      pv.restricted.phi.push_back(k);
    }
    pv.restricted.theta = p.theta;
    Extension xp = restrict_extension(x, pv.sylow);
    Extracted exp = extract_cocycle(xp);
    SecondCohomology h2p(exp.actions);
    Inducibility ind = is_inducible(xp, pv.restricted, h2p, autb_normalizing(xp));
    pv.inducible = ind.inducible;
    pv.routes_agree = ind.routes_agree();
    pv.square_commutes = h2p.class_of(restrict_cocycle(x.H, pv.sylow, w_rep)) == ind.obstruction;
    v.all_primes_inducible = v.all_primes_inducible && pv.inducible;
    v.primes.push_back(std::move(pv));
  }
  v.implication_holds = !v.all_primes_inducible || v.globally_inducible;
  v.converse_holds = !v.globally_inducible || v.all_primes_inducible;
  return v;
}

}  // namespace brace
