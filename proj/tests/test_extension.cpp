#include <doctest.h>

#include "brace/catalog.hpp"
#include "brace/error.hpp"
#include "brace/extension.hpp"
#include "oracle.hpp"

using namespace brace;

namespace {

const Cocycle2& named(const std::vector<catalog::NamedCocycle>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c.cocycle;
  throw std::runtime_error("no cocycle " + name);
}

}  // namespace

TEST_CASE("build_extension") {
  const auto w = catalog::worked_cocycles();
  ActionPair a = catalog::worked_pair();
  Extension x = build_extension(a, named(w, "beta2_tau2"));
  CHECK(x.E.order() == 8);
  CHECK(verify_brace(x.E.add_table(), x.E.circ_table()).ok());
  auto [add, circ] = testing_oracle::extension_tables(a, named(w, "beta2_tau2").beta, named(w, "beta2_tau2").tau);
  CHECK(add == x.E.add_table());
  CHECK(circ == x.E.circ_table());

  Extension d = build_extension(catalog::worked_trivial_pair(), Cocycle2::zero(2));
  CHECK(d.E.is_trivial());
  CHECK(decompose_abelian(d.E.add_table()).group == FgAbelianGroup::of({2, 2, 2}));

  Cocycle2 bad = catalog::cocycle_at_11(catalog::klein_module(), {Integer(0), Integer(1)}, {Integer(0), Integer(0)});
  try {
    build_extension(a, bad);
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACocycle);
    CHECK(std::string(e.what()).find("nonzero at (") != std::string::npos);
  }
  CHECK_THROWS_AS(build_extension(catalog::z3_inversion_pair(), Cocycle2::zero(2)), Error);
}

TEST_CASE("extract_cocycle round trips") {
  ActionPair a = catalog::worked_pair();
  for (const auto& c : catalog::worked_cocycles()) {
    Extension x = build_extension(a, c.cocycle);
    Extracted ex = extract_cocycle(x);
    CHECK(ex.cocycle == c.cocycle);
    CHECK(ex.actions == a);
  }
  Extension d = build_extension(catalog::worked_trivial_pair(), Cocycle2::zero(2));
  CHECK(extract_cocycle(d).cocycle == Cocycle2::zero(2));
  CHECK(actions_from_extension(d).is_trivial());
  // perturbed sections shift the cocycle by a coboundary
  Extension x = build_extension(a, named(catalog::worked_cocycles(), "beta2_tau2"));
  for (const auto& th : testing_oracle::all_thetas(2, 4)) {
    Extracted ex = extract_cocycle(x, perturbed_section(x, th));
    CHECK(ex.cocycle == cocycle_add(a.I, named(catalog::worked_cocycles(), "beta2_tau2"), testing_oracle::coboundary(a, th)));
  }
  CHECK(all_sections(x).size() == 4);
}

TEST_CASE("equivalence of the Klein-pair extensions") {
  const auto w = catalog::worked_cocycles();
  ActionPair a = catalog::worked_pair();
  Extension x11 = build_extension(a, named(w, "beta1_tau1"));
  Extension x12 = build_extension(a, named(w, "beta1_tau2"));
  Extension x21 = build_extension(a, named(w, "beta2_tau1"));
  Extension x22 = build_extension(a, named(w, "beta2_tau2"));
  auto self = are_equivalent(x22, x22);
  REQUIRE(self.has_value());
  CHECK(self->map == identity_perm(8));
  CHECK(are_equivalent(x11, x12).has_value());
  CHECK(are_equivalent(x21, x22).has_value());
  CHECK_FALSE(are_equivalent(x22, x11).has_value());
  CHECK_FALSE(are_equivalent(x12, x21).has_value());
  for (const auto* p : {&x11, &x12, &x21, &x22})
    for (const auto* q : {&x11, &x12, &x21, &x22})
      CHECK(are_equivalent(*p, *q).has_value() == are_equivalent_bruteforce(*p, *q).has_value());
  Extension other = build_extension(catalog::worked_trivial_pair(), Cocycle2::zero(2));
  CHECK_FALSE(are_equivalent(x11, other).has_value());  // different actions
  Extension small = build_extension(catalog::z6_z2_trivial_pair(), Cocycle2::zero(6));
  CHECK_THROWS_AS(are_equivalent(x11, small), Error);
}

TEST_CASE("classify_extensions") {
  auto two = classify_extensions(catalog::worked_pair());
  CHECK(two.size() == 2);
  auto sixteen = classify_extensions(catalog::worked_trivial_pair());
  CHECK(sixteen.size() == 16);
  for (const auto& c : sixteen) {
    CHECK(c.extension.E.order() == 8);
    CHECK(verify_brace(c.extension.E.add_table(), c.extension.E.circ_table()).ok());
  }
  auto one = classify_extensions(trivial_actions(FiniteBrace::trivial_cyclic(3), Module(FgAbelianGroup())));
  REQUIRE(one.size() == 1);
  CHECK(one[0].extension.E.order() == 3);
}

TEST_CASE("central and additively split extensions") {
  Extension d = build_extension(catalog::worked_trivial_pair(), Cocycle2::zero(2));
  CHECK(is_central_extension(d));
  CHECK(splits_additively(d).has_value());
  Extension c4 = build_extension(catalog::worked_trivial_pair(), named(catalog::trivial_action_cocycles(), "beta4_tau4"));
  CHECK(is_central_extension(c4));
  Extension x22 = build_extension(catalog::worked_pair(), named(catalog::worked_cocycles(), "beta2_tau2"));
  CHECK_FALSE(is_central_extension(x22));
  CHECK_FALSE(splits_additively(x22).has_value());
  CHECK_FALSE(splits_additively_bruteforce(x22).has_value());
  Extension x12 = build_extension(catalog::worked_pair(), named(catalog::worked_cocycles(), "beta1_tau2"));
  auto s = splits_additively(x12);
  REQUIRE(s.has_value());
  CHECK(*s == x12.section);
  for (const auto& c : classify_extensions(catalog::z6_z2_trivial_pair()))
    CHECK(splits_additively(c.extension).has_value() == splits_additively_bruteforce(c.extension).has_value());
}

TEST_CASE("make_extension validation") {
  Extension x = build_extension(catalog::worked_pair(), named(catalog::worked_cocycles(), "beta2_tau2"));
  Extension y = make_extension(x.E, x.I, x.iota, x.proj);
  CHECK(y.H == x.H);
  CHECK(y.section == x.section);
  Perm bad_proj = x.proj;
  std::swap(bad_proj[1], bad_proj[5]);
  CHECK_THROWS_AS(make_extension(x.E, x.I, x.iota, bad_proj), Error);
  // Z/8 over Z/2 with I = Z/4 does not split additively
  FiniteBrace z8 = FiniteBrace::trivial_cyclic(8);
  Extension e = make_extension(z8, Module(FgAbelianGroup::of({4})), {0, 2, 4, 6}, {0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(extract_cocycle(e).actions.is_trivial());
  CHECK_FALSE(splits_additively(e).has_value());
}

TEST_CASE("restricted extensions") {
  auto cls = classify_extensions(catalog::z6_z2_trivial_pair());
  for (const auto& c : cls) {
    Extension r = restrict_extension(c.extension, {0, 3});
    CHECK(r.E.order() == 4);
    CHECK(r.H.order() == 2);
    CHECK(verify_brace(r.E.add_table(), r.E.circ_table()).ok());
  }
}
