#pragma once

// Exact linear algebra over the integers and over finite abelian groups.
//
// Finite abelian groups appear in two guises here. A CyclicSum is any direct
// sum Z/m_1 + ... + Z/m_k (moduli in any order, 1 allowed); it is what a
// function space Fun(T, I) looks like in coordinates. An FgAbelianGroup is the
// canonical invariant-factor form d_1 | d_2 | ... | d_k with every d_i >= 2.
// Subgroups and quotients of a CyclicSum are returned in canonical form
// together with explicit witnessing maps.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brace {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Least non-negative residue of a modulo m; returns a unchanged when m == 0.
Integer reduce_mod(const Integer& a, const Integer& m);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const;
  bool is_diagonal() const;

  IntVector operator*(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += k * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
  /// col_i += k * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// S = U * M * V with U, V unimodular and S diagonal, s_1 | s_2 | ... >= 0.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Smith form with optional inverse of U, and the rank (number of nonzero
/// diagonal entries).
struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithDecomposition smith_decompose(const IntMatrix& m, bool want_u_inverse);

/// Z/m_1 + ... + Z/m_k. A modulus 0 denotes a free summand.
class CyclicSum {
 public:
  CyclicSum() = default;
  explicit CyclicSum(IntVector moduli);
  static CyclicSum repeated(const IntVector& block, std::size_t copies);
  static CyclicSum direct_sum(const CyclicSum& a, const CyclicSum& b);

  std::size_t rank() const noexcept { return moduli_.size(); }
  const IntVector& moduli() const noexcept { return moduli_; }
  bool is_finite() const;
  Integer order() const;

  IntVector reduce(IntVector v) const;
  bool is_zero(const IntVector& v) const;
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector sub(const IntVector& a, const IntVector& b) const;

  friend bool operator==(const CyclicSum&, const CyclicSum&) = default;

 private:
  IntVector moduli_;
};

/// Canonical invariant-factor form. The trivial group has no factors.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  explicit FgAbelianGroup(IntVector invariant_factors);
  static FgAbelianGroup of(std::initializer_list<long long> factors);

  const IntVector& invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  Integer order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }
  CyclicSum as_cyclic_sum() const { return CyclicSum(factors_); }

  // Carrier indexing: coordinate vectors ordered lexicographically, first
  // coordinate most significant, e.g. (Z/2)^2: (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3.
  std::size_t carrier_size() const;
  IntVector coordinates(std::size_t index) const;
  std::size_t index_of(const IntVector& coords) const;

  /// "0", "Z/2", "Z/2 x Z/4".
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  IntVector factors_;
};

/// A homomorphism between cyclic sums, acting on column vectors.
class AbelianHom {
 public:
  AbelianHom(CyclicSum source, CyclicSum target, IntMatrix matrix);

  const CyclicSum& source() const noexcept { return source_; }
  const CyclicSum& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(const IntVector& x) const;
  /// this after first: first.source -> this.target
  AbelianHom after(const AbelianHom& first) const;

 private:
  CyclicSum source_;
  CyclicSum target_;
  IntMatrix matrix_;
};

/// Basis (as columns) of the lattice {x in Z^n : M x = 0 mod moduli}, where
/// moduli has one entry per row of M (0 meaning exact equality).
IntMatrix lattice_kernel(const IntMatrix& m, const IntVector& moduli);

/// Some x with M x = rhs mod moduli, if one exists.
std::optional<IntVector> solve_congruences(const IntMatrix& m, const IntVector& rhs,
                                           const IntVector& moduli);

/// The subgroup of a finite CyclicSum generated by the columns of a matrix.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(CyclicSum ambient, IntMatrix generators);

  const CyclicSum& ambient() const noexcept { return ambient_; }
  const IntMatrix& generators() const noexcept { return generators_; }
  const FgAbelianGroup& structure() const noexcept { return structure_; }
  Integer order() const { return structure_.order(); }
  /// Column j is (the ambient image of) the j-th canonical generator.
  const IntMatrix& inclusion() const noexcept { return inclusion_; }
  /// Column j expresses canonical generator j in terms of the given generators.
  const IntMatrix& combination() const noexcept { return combination_; }

  /// Canonical coordinates of an ambient element, or nullopt if outside.
  std::optional<IntVector> coordinates(const IntVector& element) const;
  bool contains(const IntVector& element) const { return coordinates(element).has_value(); }
  /// Ambient element with the given canonical coordinates.
  IntVector element(const IntVector& coords) const;
  /// Coefficients on the original generators producing the element.
  std::optional<IntVector> preimage(const IntVector& element) const;

  /// All elements, in canonical-coordinate carrier order. Throws
  /// OrderTooLarge above the limit.
  std::vector<IntVector> elements(std::size_t limit = 1u << 22) const;

 private:
  CyclicSum ambient_;
  IntMatrix generators_;
  FgAbelianGroup structure_;
  IntMatrix inclusion_;
  IntMatrix combination_;
  // generator-coordinate solver: [G | diag(m)] = U_inv S V_inv
  IntMatrix solve_u_;
  IntMatrix solve_v_;
  IntMatrix solve_s_diag_;
  std::size_t solve_rank_ = 0;
  // Z^k / L coordinates: y = coord_u_ * x
  IntMatrix coord_u_;
  std::vector<std::size_t> nontrivial_rows_;
};

/// ambient / <generators>, with projection onto canonical coordinates.
class Quotient {
 public:
  Quotient() = default;
  Quotient(CyclicSum ambient, IntMatrix sub_generators);

  const CyclicSum& ambient() const noexcept { return ambient_; }
  const FgAbelianGroup& structure() const noexcept { return structure_; }
  const IntMatrix& projection() const noexcept { return projection_; }
  /// Canonical coordinates of the coset of x.
  IntVector project(const IntVector& x) const;
  /// An ambient element in the coset with the given coordinates.
  IntVector lift(const IntVector& coords) const;

 private:
  CyclicSum ambient_;
  FgAbelianGroup structure_;
  IntMatrix projection_;
  IntMatrix lift_;
};

Subgroup hom_kernel(const AbelianHom& f);
Subgroup hom_image(const AbelianHom& f);
Quotient quotient_invariants(const IntMatrix& sub_generators, const CyclicSum& ambient);

/// Flat n x n Cayley table.
struct CayleyTable {
  int n = 0;
  std::vector<int> data;

  CayleyTable() = default;
  explicit CayleyTable(int order) : n(order), data(static_cast<std::size_t>(order) * order, 0) {}
  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

  int operator()(int a, int b) const { return data[static_cast<std::size_t>(a) * n + b]; }
  int& at(int a, int b) { return data[static_cast<std::size_t>(a) * n + b]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

/// Canonical form of an abelian group table. to_canonical[a] is the carrier
/// index (in the FgAbelianGroup indexing) of table element a.
struct AbelianDecomposition {
  FgAbelianGroup group;
  std::vector<std::size_t> to_canonical;
};

AbelianDecomposition decompose_abelian(const CayleyTable& table);

/// Addition table of the canonical carrier of g.
CayleyTable canonical_addition_table(const FgAbelianGroup& g);

}  // namespace brace
