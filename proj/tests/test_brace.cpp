#include <doctest.h>

#include <random>

#include "brace/brace.hpp"
#include "brace/catalog.hpp"
#include "brace/error.hpp"
#include "brace/extension.hpp"
#include "brace/kernels.hpp"
#include "oracle.hpp"

using namespace brace;

namespace {

CayleyTable cyclic(int n) {
  CayleyTable t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  return t;
}

// Z/4 transported along the swap of 1 and 2, which is not additive
CayleyTable swapped_cyclic4() {
  const int pi[4] = {0, 2, 1, 3};
  CayleyTable t(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.at(a, b) = pi[(pi[a] + pi[b]) % 4];
  return t;
}

CayleyTable klein() {
  CayleyTable t(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.at(a, b) = a ^ b;
  return t;
}

Extension nontrivial_eight() {
  return build_extension(catalog::worked_pair(), catalog::worked_cocycles()[3].cocycle);
}

}  // namespace

TEST_CASE("verify_brace") {
  CHECK(verify_brace(cyclic(2), cyclic(2)).ok());
  // (Z/4, Klein) with the xor labelling is a brace, lambda_1 = -1 and lambda_2 = 1
  CHECK(verify_brace(cyclic(4), klein()).ok());
  CHECK(testing_oracle::is_brace(cyclic(4), klein()));
  Report r = verify_brace(cyclic(4), swapped_cyclic4());
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(testing_oracle::is_brace(cyclic(4), swapped_cyclic4()));
  CHECK_FALSE(r.failures.front().elements.empty());

  CayleyTable broken = cyclic(3);
  broken.at(1, 1) = 1;
  Report b = verify_brace(broken, cyclic(3));
  REQUIRE_FALSE(b.ok());
}

TEST_CASE("constructor maps axiom failures to error codes") {
  auto code_of = [](const CayleyTable& a, const CayleyTable& c) {
    try {
      FiniteBrace e(a, c);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::OracleMismatch;
  };
  CHECK(code_of(cyclic(4), swapped_cyclic4()) == ErrorCode::NotABrace);
  CayleyTable shifted = CayleyTable::from_rows({{1, 0}, {0, 1}});
  CHECK(code_of(shifted, shifted) == ErrorCode::IdentityNotZero);
  CayleyTable s3 = CayleyTable::from_rows(
      {{0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 5, 0, 4, 3, 1}, {3, 4, 5, 0, 1, 2}, {4, 3, 1, 2, 5, 0}, {5, 2, 3, 1, 0, 4}});
  CHECK(code_of(s3, s3) == ErrorCode::NotAbelian);
}

TEST_CASE("lambda maps") {
  FiniteBrace t = FiniteBrace::trivial_cyclic(5);
  for (int a = 0; a < 5; ++a) CHECK(lambda_map(t, a) == identity_perm(5));
  Extension x = nontrivial_eight();
  CHECK(lambda_map(x.E, 0) == identity_perm(8));
  // lambda_{s(1)} restricted to iota(I) is nu_1
  Perm l = lambda_map(x.E, x.section[1]);
  const ActionPair a = catalog::worked_pair();
  for (int y = 0; y < 4; ++y) CHECK(l[x.iota[y]] == x.iota[a.nu_of(1, y)]);
}

TEST_CASE("classify_subset") {
  Extension x = nontrivial_eight();
  BraceSubset zero = classify_subset(x.E, {0});
  CHECK(zero.is_central);
  BraceSubset all = classify_subset(x.E, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(all.is_ideal);
  BraceSubset i = classify_subset(x.E, x.iota);
  CHECK(i.is_ideal);
  CHECK_FALSE(i.is_central);
}

TEST_CASE("brace automorphisms match permutation search") {
  CHECK(brace_automorphisms(FiniteBrace::trivial_cyclic(2)).size() == 1);
  CHECK(brace_automorphisms(FiniteBrace::trivial(FgAbelianGroup::of({2, 2}))).size() == 6);
  CHECK(brace_automorphisms(FiniteBrace::trivial_cyclic(4)).size() == 2);
  for (const auto& e : enumerate_braces(4)) {
    auto fast = brace_automorphisms(e);
    auto slow = testing_oracle::automorphisms(e);
    std::sort(fast.begin(), fast.end());
    CHECK(fast == slow);
  }
  Extension x = nontrivial_eight();
  auto fast = brace_automorphisms(x.E);
  std::sort(fast.begin(), fast.end());
  CHECK(fast == testing_oracle::automorphisms(x.E));
  CHECK_THROWS_AS(brace_automorphisms(FiniteBrace::trivial_cyclic(20)), Error);
}

TEST_CASE("quotients and Sylow left ideals") {
  FiniteBrace z6 = FiniteBrace::trivial_cyclic(6);
  CHECK(quotient_brace(z6, {0, 1, 2, 3, 4, 5}).brace.order() == 1);
  CHECK(quotient_brace(z6, {0}).brace == z6);
  Extension x = nontrivial_eight();
  QuotientBrace q = quotient_brace(x.E, x.iota);
  CHECK(q.brace == FiniteBrace::trivial_cyclic(2));
  CHECK(sylow_left_ideal(z6, 2).elements == std::vector<int>{0, 3});
  CHECK(sylow_left_ideal(z6, 3).elements == std::vector<int>{0, 2, 4});
  CHECK(sylow_left_ideal(FiniteBrace::trivial_cyclic(7), 7).elements.size() == 7);
  CHECK_THROWS_AS(sylow_left_ideal(z6, 5), Error);
}

TEST_CASE("enumeration agrees with brute force") {
  CHECK(enumerate_braces(1).size() == 1);
  CHECK(enumerate_braces(2).size() == 1);
  CHECK(testing_oracle::count_braces(2) == 1);
  CHECK(testing_oracle::count_braces(3) == 1);
  const int four = testing_oracle::count_braces(4);
  CHECK(four == 4);
  CHECK(enumerate_braces(4).size() == static_cast<std::size_t>(four));
  // regression values for the enumerator
  const std::size_t expected[] = {1, 1, 1, 4, 1, 2};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_braces(n).size() == expected[n - 1]);
  for (const auto& e : enumerate_braces(6)) CHECK(verify_brace(e.add_table(), e.circ_table()).ok());
}

TEST_CASE("YBE solutions") {
  FiniteBrace t = FiniteBrace::trivial_cyclic(3);
  YbeSolution r = ybe_solution(t);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(r(x, y) == std::pair{y, x});
  for (const auto& e : enumerate_braces(4)) CHECK(check_ybe(ybe_solution(e)).ok());
  CHECK(check_ybe(ybe_solution(nontrivial_eight().E)).ok());
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    CayleyTable t = cyclic(n);
    if (trial % 2) {
      std::uniform_int_distribution<int> d(0, n - 1);
      t.at(d(rng), d(rng)) = d(rng);
    }
    CHECK(kernels::associativity_failure_serial(t) == kernels::associativity_failure_parallel(t));
    CHECK(kernels::compatibility_failure_serial(cyclic(n), t) == kernels::compatibility_failure_parallel(cyclic(n), t));
  }
  FiniteBrace v = FiniteBrace::trivial(FgAbelianGroup::of({2, 2, 2}));
  auto s = kernels::make_automorphism_search(v.add_table(), nullptr);
  auto serial = kernels::automorphism_search_serial(s);
  CHECK(serial.size() == 168);
  CHECK(serial == kernels::automorphism_search_parallel(s));
  auto f = [](std::size_t i) { return static_cast<int>((i * 37) % 101); };
  CHECK(kernels::tabulate_serial(1000, f) == kernels::tabulate_parallel(1000, f));
}
