#include <doctest.h>

#include "brace/action.hpp"
#include "brace/catalog.hpp"
#include "brace/error.hpp"

using namespace brace;

TEST_CASE("verify_action_pair") {
  CHECK(verify_action_pair(trivial_actions(FiniteBrace::trivial_cyclic(3), Module(FgAbelianGroup::of({2, 2})))).ok());
  CHECK(verify_action_pair(catalog::worked_pair()).ok());
  Report lit = verify_action_pair(catalog::literal_pair());
  REQUIRE_FALSE(lit.ok());
  bool at_zero = false;
  for (const auto& w : lit.failures) at_zero = at_zero || (w.elements == std::vector<int>{0});
  CHECK(at_zero);
  CHECK(lit.failures.front().axiom == "nu.identity");
}

TEST_CASE("good pairs") {
  CHECK(is_good_pair(catalog::worked_trivial_pair()).good);
  CHECK(is_good_pair(catalog::worked_pair()).good);
  GoodPairResult z3 = is_good_pair(catalog::z3_inversion_pair());
  CHECK_FALSE(z3.good);
  REQUIRE(z3.witness.has_value());
  CHECK(*z3.witness == std::array<int, 3>{1, 1, 1});
  CHECK_THROWS_AS(is_good_pair(catalog::literal_pair()), Error);
  try {
    require_good_pair(catalog::z3_inversion_pair());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGoodPair);
  }
}

TEST_CASE("twists and compatible pairs") {
  ActionPair a = catalog::worked_pair();
  CHECK(twist_module(a, identity_perm(2)) == a);
  ActionPair t = catalog::worked_trivial_pair();
  CHECK(twist_module(t, identity_perm(2)) == t);
  CHECK_THROWS_AS(twist_module(a, Perm{1, 0}), Error);

  CHECK(is_compatible_pair(identity_perm(2), identity_perm(4), a, a));
  // zeta = zero map into the trivial module
  ActionPair to_zero = trivial_actions(a.H, Module(FgAbelianGroup()));
  CHECK(is_compatible_pair(identity_perm(2), Perm{0, 0, 0, 0}, a, to_zero));

  // Sylow inclusion: restriction of the actions is compatible with the inclusion
  ActionPair z6 = catalog::z6_z2_trivial_pair();
  ActionPair r = restrict_actions(z6, {0, 3});
  CHECK(is_compatible_pair(Perm{0, 3}, identity_perm(2), z6, r));
}

TEST_CASE("enumerate_action_pairs") {
  // Z/2 acting on (Z/2)^2: 4 homomorphisms Z/2 -> S3 each way
  auto pairs = enumerate_action_pairs(FiniteBrace::trivial_cyclic(2), catalog::klein_module());
  CHECK(pairs.size() == 16);
  std::size_t good = 0;
  for (const auto& p : pairs) {
    CHECK(verify_action_pair(p).ok());
    good += is_good_pair(p).good;
  }
  CHECK(good >= 2);
  bool found = false;
  ActionPair w = catalog::worked_pair();
  for (const auto& p : pairs) found = found || (p.nu == w.nu && p.sigma == w.sigma);
  CHECK(found);
}
