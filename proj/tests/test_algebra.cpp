#include <doctest.h>

#include <random>
#include <set>

#include "brace/algebra.hpp"
#include "brace/error.hpp"

using namespace brace;

namespace {

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

bool unimodular(const IntMatrix& m) {
  // |det| = 1 via Smith form of m itself
  SmithForm f = smith_normal_form(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (f.S(i, i) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SmithForm id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.S == IntMatrix::identity(2));
  CHECK(id.U == IntMatrix::identity(2));
  CHECK(id.V == IntMatrix::identity(2));

  IntMatrix m{{2, 4}, {6, 8}};
  SmithForm f = smith_normal_form(m);
  CHECK(f.S == IntMatrix{{2, 0}, {0, 4}});
  CHECK(f.U * m * f.V == f.S);

  IntMatrix z(3, 2);
  CHECK(smith_normal_form(z).S == z);
}

TEST_CASE("smith normal form on random integer matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    SmithForm f = smith_normal_form(m);
    REQUIRE(f.U * m * f.V == f.S);
    CHECK(f.S.is_diagonal());
    const std::size_t k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(f.S(i, i) >= 0);
      if (i + 1 < k && f.S(i, i) != 0) CHECK(f.S(i + 1, i + 1) % f.S(i, i) == 0);
      if (f.S(i, i) == 0 && i + 1 < k) CHECK(f.S(i + 1, i + 1) == 0);
    }
    CHECK(unimodular(f.U));
    CHECK(unimodular(f.V));
  }
}

TEST_CASE("entries beyond 64 bits stay exact") {
  IntMatrix m{{1, 0}, {0, 1}};
  Integer big = 1;
  for (int k = 0; k < 100; ++k) big *= 3;
  m(0, 0) = big;
  m(1, 1) = big * 2;
  SmithForm f = smith_normal_form(m);
  CHECK(f.S(0, 0) == big);
  CHECK(f.S(1, 1) == big * 2);
}

TEST_CASE("decompose_abelian") {
  CayleyTable z4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) z4.at(a, b) = (a + b) % 4;
  CHECK(decompose_abelian(z4).group == FgAbelianGroup::of({4}));

  CayleyTable klein(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) klein.at(a, b) = a ^ b;
  AbelianDecomposition d = decompose_abelian(klein);
  CHECK(d.group == FgAbelianGroup::of({2, 2}));
  // exponent 2: every element doubles to 0
  for (int a = 0; a < 4; ++a) CHECK(klein(a, a) == 0);

  CayleyTable bad = CayleyTable::from_rows({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
  try {
    decompose_abelian(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAGroup);
  }
}

TEST_CASE("kernels, images and quotients") {
  CyclicSum z2(iv({2})), z4(iv({4}));
  Subgroup k = hom_kernel(AbelianHom(z2, z2, IntMatrix{{0}}));
  CHECK(k.order() == 2);
  Subgroup im = hom_image(AbelianHom(z4, z4, IntMatrix{{2}}));
  CHECK(im.order() == 2);
  CHECK(im.contains(iv({2})));
  CHECK_FALSE(im.contains(iv({1})));

  CyclicSum v(iv({2, 2}));
  Quotient q = quotient_invariants(IntMatrix{{1}, {1}}, v);
  CHECK(q.structure() == FgAbelianGroup::of({2}));
  // brute-force coset count
  std::set<IntVector> cosets;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) cosets.insert(q.project(iv({a, b})));
  CHECK(cosets.size() == 2);
  CHECK(q.project(iv({1, 1})) == q.project(iv({0, 0})));
}

TEST_CASE("subgroup coordinates round-trip") {
  CyclicSum amb(iv({4, 6, 2}));
  IntMatrix gens{{2, 0}, {3, 2}, {1, 1}};
  Subgroup s(amb, gens);
  for (const auto& e : s.elements()) {
    auto c = s.coordinates(e);
    REQUIRE(c.has_value());
    CHECK(s.element(*c) == e);
    auto pre = s.preimage(e);
    REQUIRE(pre.has_value());
    CHECK(amb.reduce(gens * *pre) == e);
  }
  CHECK(s.order() == Integer(s.elements().size()));
}

TEST_CASE("solve_congruences") {
  IntMatrix m{{2, 0}, {0, 3}};
  auto x = solve_congruences(m, iv({1, 0}), iv({4, 6}));
  CHECK_FALSE(x.has_value());  // 2x = 1 mod 4 has no solution
  auto y = solve_congruences(m, iv({2, 3}), iv({4, 6}));
  REQUIRE(y.has_value());
  CHECK(reduce_mod(2 * (*y)[0], 4) == 2);
  CHECK(reduce_mod(3 * (*y)[1], 6) == 3);
}

TEST_CASE("lattice kernel") {
  // x + 2y = 0 mod 4
  IntMatrix basis = lattice_kernel(IntMatrix{{1, 2}}, iv({4}));
  for (std::size_t c = 0; c < basis.cols(); ++c) CHECK(reduce_mod(basis(0, c) + 2 * basis(1, c), 4) == 0);
  // index of the lattice is 4
  CHECK(smith_normal_form(basis).S(0, 0) * smith_normal_form(basis).S(1, 1) == 4);
}
