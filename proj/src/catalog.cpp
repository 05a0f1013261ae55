#include "brace/catalog.hpp"

namespace brace::catalog {

namespace {

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

// Table of an affine map (a, b) -> ((a*p + b*q + c) mod 2, (a*r + b*s + d) mod 2).
Perm klein_map(int p, int q, int c, int r, int s, int d) {
  Perm f(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) f[static_cast<std::size_t>(2 * a + b)] = 2 * ((a * p + b * q + c) % 2) + (a * r + b * s + d) % 2;
  return f;
}

}  // namespace

FiniteBrace trivial_cyclic(int n) { return FiniteBrace::trivial_cyclic(n); }

Module klein_module() { return Module(FgAbelianGroup::of({2, 2})); }

ActionPair worked_pair() {
  ActionPair a;
  a.H = trivial_cyclic(2);
  a.I = klein_module();
  for (int h = 0; h < 2; ++h) {
    a.nu.push_back(klein_map(1, h, 0, 0, 1, 0));
    a.sigma.push_back(klein_map(1, 0, 0, h, 1, 0));
  }
  a.comment =
      "amended reading nu_h(a,b) = (a + h*b, b), sigma_h(a,b) = (a, b + h*a); "
      "the variant nu_h(a,b) = (a+b+h, b), sigma_h(a,b) = (a, b+a+h) has nu_0 != id";
  return a;
}

ActionPair literal_pair() {
  ActionPair a;
  a.H = trivial_cyclic(2);
  a.I = klein_module();
  for (int h = 0; h < 2; ++h) {
    a.nu.push_back(klein_map(1, 1, h, 0, 1, 0));
    a.sigma.push_back(klein_map(1, 0, 0, 1, 1, h));
  }
  a.comment = "literal reading nu_h(a,b) = (a+b+h, b), sigma_h(a,b) = (a, b+a+h)";
  return a;
}

ActionPair worked_trivial_pair() {
  ActionPair a = trivial_actions(trivial_cyclic(2), klein_module());
  a.comment = "trivial actions";
  return a;
}

ActionPair z3_inversion_pair() {
  ActionPair a;
  a.H = trivial_cyclic(2);
  a.I = Module(FgAbelianGroup::of({3}));
  a.nu = {Perm{0, 1, 2}, Perm{0, 2, 1}};
  a.sigma = {Perm{0, 1, 2}, Perm{0, 1, 2}};
  a.comment = "nu_1 = inversion on Z/3, sigma trivial";
  return a;
}

ActionPair z6_z2_trivial_pair() {
  ActionPair a = trivial_actions(trivial_cyclic(6), Module(FgAbelianGroup::of({2})));
  a.comment = "trivial actions of Z/6 on Z/2";
  return a;
}

Cocycle2 cocycle_at_11(const Module& i, const IntVector& beta11, const IntVector& tau11) {
  Cocycle2 c = Cocycle2::zero(2);
  c.beta.set(1, 1) = i.element(beta11);
  c.tau.set(1, 1) = i.element(tau11);
  return c;
}

std::vector<NamedCocycle> worked_cocycles() {
  const Module i = klein_module();
  const IntVector beta[2] = {iv({0, 0}), iv({1, 0})};
  const IntVector tau[2] = {iv({0, 0}), iv({0, 1})};
  std::vector<NamedCocycle> out;
  for (int b = 0; b < 2; ++b)
    for (int t = 0; t < 2; ++t)
      out.push_back({"beta" + std::to_string(b + 1) + "_tau" + std::to_string(t + 1), cocycle_at_11(i, beta[b], tau[t])});
  return out;
}

std::vector<NamedCocycle> trivial_action_cocycles() {
  const Module i = klein_module();
  const IntVector vals[4] = {iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})};
  std::vector<NamedCocycle> out;
  for (int b = 0; b < 4; ++b)
    for (int t = 0; t < 4; ++t)
      out.push_back({"beta" + std::to_string(b + 1) + "_tau" + std::to_string(t + 1), cocycle_at_11(i, vals[b], vals[t])});
  return out;
}

}  // namespace brace::catalog
