#include <doctest.h>

#include <random>

#include "brace/catalog.hpp"
#include "brace/cohomology.hpp"
#include "brace/error.hpp"
#include "brace/general_complex.hpp"
#include "oracle.hpp"

using namespace brace;

namespace {

Cochain random_cochain(std::mt19937& rng, int arity, int n, int m) {
  Cochain f(arity, n);
  std::uniform_int_distribution<int> d(0, m - 1);
  for (auto& v : f.values) v = d(rng);
  return f;
}

std::vector<ActionPair> sample_pairs() {
  std::vector<ActionPair> out = {catalog::worked_pair(), catalog::worked_trivial_pair(), catalog::z6_z2_trivial_pair()};
  for (const auto& h : enumerate_braces(4))
    for (const auto& a : enumerate_action_pairs(h, catalog::klein_module()))
      if (is_good_pair(a).good) {
        out.push_back(a);
        break;
      }
  return out;
}

}  // namespace

TEST_CASE("general differential squares to zero") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (const auto& a : sample_pairs())
    for (int n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 12; ++trial) {
        Cochain f = random_cochain(rng, n, a.H.order(), a.I.order());
        CHECK(general_differential(a, general_differential(a, f)).is_zero());
        ++checked;
      }
  CHECK(checked >= 100);
  ActionPair a = catalog::worked_pair();
  CHECK(general_differential(a, Cochain(2, 2)).is_zero());
}

TEST_CASE("degree one differential on trivial data") {
  ActionPair t = catalog::z6_z2_trivial_pair();
  std::mt19937 rng(3);
  Cochain f = random_cochain(rng, 1, 6, 2);
  Cochain d = general_differential(t, f);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(d(x, y) == t.I.add(t.I.sub(f(y), f((x + y) % 6)), f(x)));
  // agrees with the tau part of d1 on normalized cochains
  ActionPair a = catalog::worked_pair();
  for (const auto& th : testing_oracle::all_thetas(2, 4)) CHECK(general_differential(a, th) == d1(a, th).tau);
}

TEST_CASE("group cocycle embedding") {
  ActionPair a = catalog::worked_pair();
  Cochain tau(2, 2);
  tau.set(1, 1) = 1;
  Cochain g = to_group_cocycle(a, tau);
  CHECK(is_group_cocycle(a, g));
  CHECK(to_group_cocycle(a, Cochain(2, 2)).is_zero());
  ActionPair t = catalog::worked_trivial_pair();
  for (int v = 0; v < 4; ++v) {
    Cochain f(2, 2);
    f.set(1, 1) = v;
    CHECK(to_group_cocycle(t, f) == f);
  }
  Cochain not_cocycle(2, 2);
  not_cocycle.set(1, 1) = 2;  // beta = 0 forces tau to be a cocycle of its own
  bool cocycle = is_cocycle(a, {Cochain(2, 2), not_cocycle});
  if (!cocycle) CHECK_THROWS_AS(to_group_cocycle(a, not_cocycle), Error);
  // coboundaries are group cocycles
  for (const auto& th : testing_oracle::all_thetas(2, 4)) CHECK(is_group_cocycle(a, group_coboundary(a, th)));
}

TEST_CASE("pushforward and restriction") {
  ActionPair a = catalog::z6_z2_trivial_pair();
  std::mt19937 rng(5);
  Cochain f = random_cochain(rng, 2, 6, 2);
  CHECK(pushforward(identity_perm(6), identity_perm(2), a, a, f) == f);
  ActionPair zero = trivial_actions(a.H, Module(FgAbelianGroup()));
  CHECK(pushforward(identity_perm(6), Perm{0, 0}, a, zero, f).is_zero());
  ActionPair r = restrict_actions(a, {0, 3});
  Cochain res = restrict_cochain(a.H, {0, 3}, f);
  CHECK(pushforward(Perm{0, 3}, identity_perm(2), a, r, f) == res);
  CHECK(res.h_order == 2);
  CHECK(res(1, 1) == f(3, 3));
  CHECK(res(0, 1) == f(0, 3));
  CHECK(restrict_cochain(a.H, {0, 1, 2, 3, 4, 5}, f) == f);
  CHECK(restrict_cochain(a.H, {0}, f).size() == 1);
  CHECK_THROWS_AS(restrict_cochain(FiniteBrace::trivial_cyclic(6), {0, 1}, f), Error);
}
