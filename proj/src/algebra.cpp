#include "brace/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "brace/error.hpp"

namespace brace {

namespace {

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd_int(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// a^-1 mod m, a and m coprime
Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer old_r = reduce_mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::logic_error("inverse_mod: not invertible");
  return reduce_mod(old_s, m);
}

}  // namespace

Integer reduce_mod(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r = a % m;
  if (r < 0) r += abs_value(m);
  return r;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::DimensionMismatch, "column block");
  IntMatrix b(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
  return b;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorCode::DimensionMismatch, "row block");
  IntMatrix b(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(first + r, c);
  return b;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "hstack row counts differ");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack column counts differ");
  IntMatrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& x = (*this)(r, c);
      if (x != 0 && v[c] != 0) acc += x * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (b(k, c) != 0) m(r, c) += x * b(k, c);
    }
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(j, c) != 0) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, j) != 0) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ------------------------------------------------------------- Smith form

SmithDecomposition smith_decompose(const IntMatrix& m, bool want_u_inverse) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition d;
  d.S = m;
  d.U = IntMatrix::identity(rows);
  d.V = IntMatrix::identity(cols);
  if (want_u_inverse) d.U_inv = IntMatrix::identity(rows);
  IntMatrix& S = d.S;

  auto row_add = [&](std::size_t i, std::size_t j, const Integer& k) {
    S.add_row_multiple(i, j, k);
    d.U.add_row_multiple(i, j, k);
    if (want_u_inverse) d.U_inv.add_col_multiple(j, i, -k);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    S.swap_rows(i, j);
    d.U.swap_rows(i, j);
    if (want_u_inverse) d.U_inv.swap_cols(i, j);
  };
  auto row_negate = [&](std::size_t i) {
    S.negate_row(i);
    d.U.negate_row(i);
    if (want_u_inverse) d.U_inv.negate_col(i);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Integer& k) {
    S.add_col_multiple(i, j, k);
    d.V.add_col_multiple(i, j, k);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    S.swap_cols(i, j);
    d.V.swap_cols(i, j);
  };

  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& x = S(i, j);
        if (x == 0) continue;
        Integer ax = abs_value(x);
        if (pi == rows || ax < best) {
          best = ax;
          pi = i;
          pj = j;
          if (best == 1) goto found;
        }
      }
  found:
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        row_add(i, t, -q);
        if (S(i, t) != 0) {
          row_swap(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        col_add(j, t, -q);
        if (S(t, j) != 0) {
          col_swap(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S(i, j) % S(t, t) != 0) {
            row_add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (S(t, t) < 0) row_negate(t);
  }
  d.rank = t;
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithDecomposition d = smith_decompose(m, false);
  return SmithForm{std::move(d.S), std::move(d.U), std::move(d.V)};
}

// -------------------------------------------------------------- CyclicSum

CyclicSum::CyclicSum(IntVector moduli) : moduli_(std::move(moduli)) {
  for (const auto& m : moduli_)
    if (m < 0) throw std::invalid_argument("CyclicSum: negative modulus");
}

CyclicSum CyclicSum::repeated(const IntVector& block, std::size_t copies) {
  IntVector m;
  m.reserve(block.size() * copies);
  for (std::size_t i = 0; i < copies; ++i) m.insert(m.end(), block.begin(), block.end());
  return CyclicSum(std::move(m));
}

CyclicSum CyclicSum::direct_sum(const CyclicSum& a, const CyclicSum& b) {
  IntVector m = a.moduli_;
  m.insert(m.end(), b.moduli_.begin(), b.moduli_.end());
  return CyclicSum(std::move(m));
}

bool CyclicSum::is_finite() const {
  return std::none_of(moduli_.begin(), moduli_.end(), [](const Integer& m) { return m == 0; });
}

Integer CyclicSum::order() const {
  if (!is_finite()) throw std::logic_error("CyclicSum::order of an infinite group");
  Integer o = 1;
  for (const auto& m : moduli_) o *= m;
  return o;
}

IntVector CyclicSum::reduce(IntVector v) const {
  if (v.size() != moduli_.size()) throw Error(ErrorCode::DimensionMismatch, "element length");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = reduce_mod(v[i], moduli_[i]);
  return v;
}

bool CyclicSum::is_zero(const IntVector& v) const {
  if (v.size() != moduli_.size()) throw Error(ErrorCode::DimensionMismatch, "element length");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (reduce_mod(v[i], moduli_[i]) != 0) return false;
  return true;
}

IntVector CyclicSum::add(const IntVector& a, const IntVector& b) const {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

IntVector CyclicSum::sub(const IntVector& a, const IntVector& b) const {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return reduce(std::move(r));
}

// --------------------------------------------------------- FgAbelianGroup

FgAbelianGroup::FgAbelianGroup(IntVector invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::of(std::initializer_list<long long> factors) {
  IntVector f;
  for (long long x : factors) f.emplace_back(x);
  return FgAbelianGroup(std::move(f));
}

Integer FgAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

std::size_t FgAbelianGroup::carrier_size() const {
  Integer o = order();
  if (o > Integer(std::numeric_limits<std::uint32_t>::max()))
    throw Error(ErrorCode::OrderTooLarge, "group of order " + o.str() + " has no indexed carrier");
  return static_cast<std::size_t>(o);
}

IntVector FgAbelianGroup::coordinates(std::size_t index) const {
  IntVector c(factors_.size());
  Integer rest = index;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    c[i] = rest % factors_[i];
    rest /= factors_[i];
  }
  if (rest != 0) throw Error(ErrorCode::IndexOutOfRange, "carrier index " + std::to_string(index));
  return c;
}

std::size_t FgAbelianGroup::index_of(const IntVector& coords) const {
  if (coords.size() != factors_.size())
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  Integer idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * factors_[i] + reduce_mod(coords[i], factors_[i]);
  return static_cast<std::size_t>(idx);
}

std::string FgAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].str();
  }
  return s;
}

// ------------------------------------------------------------ AbelianHom

AbelianHom::AbelianHom(CyclicSum source, CyclicSum target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw Error(ErrorCode::DimensionMismatch, "hom matrix shape does not match groups");
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    IntVector col = matrix_.column(j);
    for (auto& x : col) x *= source_.moduli()[j];
    if (!target_.is_zero(col))
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix does not define a homomorphism (column " + std::to_string(j) + ")");
  }
}

IntVector AbelianHom::apply(const IntVector& x) const { return target_.reduce(matrix_ * x); }

AbelianHom AbelianHom::after(const AbelianHom& first) const {
  if (!(first.target_ == source_)) throw Error(ErrorCode::DimensionMismatch, "composition");
  IntMatrix prod = matrix_ * first.matrix_;
  for (std::size_t r = 0; r < prod.rows(); ++r)
    for (std::size_t c = 0; c < prod.cols(); ++c)
      prod(r, c) = reduce_mod(prod(r, c), target_.moduli()[r]);
  return AbelianHom(first.source_, target_, std::move(prod));
}

// ------------------------------------------------------ congruence systems

namespace {

// Incremental reduction of {x : M x = rhs mod moduli}. Maintains a particular
// solution and generators of the homogeneous lattice. When all moduli are
// positive the lattice always contains N Z^n (N = lcm of moduli), which is
// kept implicit so that generators may be reduced mod N.
struct CongruenceReducer {
  std::size_t n;
  std::vector<IntVector> basis;  // columns
  IntVector particular;
  Integer exponent;  // 0 when some modulus is 0
  bool feasible = true;

  CongruenceReducer(std::size_t dim, const IntVector& moduli) : n(dim), particular(dim, Integer(0)) {
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector e(dim, Integer(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    exponent = 1;
    for (const auto& m : moduli) {
      if (m == 0) {
        exponent = 0;
        break;
      }
      exponent = exponent / gcd_int(exponent, m) * m;
    }
  }

  static Integer dot(const std::vector<std::pair<std::size_t, Integer>>& row, const IntVector& v) {
    Integer acc = 0;
    for (const auto& [idx, coef] : row)
      if (v[idx] != 0) acc += coef * v[idx];
    return acc;
  }

  void reduce_vector(IntVector& v) const {
    if (exponent == 0) return;
    for (auto& x : v) x = reduce_mod(x, exponent);
  }

  void constrain(const std::vector<std::pair<std::size_t, Integer>>& row, const Integer& modulus,
                 const Integer* target) {
    std::vector<Integer> values(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) values[j] = reduce_mod(dot(row, basis[j]), modulus);

    // Column-wise Euclid until at most one value is nonzero.
    std::size_t pivot = basis.size();
    for (;;) {
      pivot = basis.size();
      for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] != 0 && (pivot == basis.size() || abs_value(values[j]) < abs_value(values[pivot])))
          pivot = j;
      if (pivot == basis.size()) break;
      bool others = false;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (j == pivot || values[j] == 0) continue;
        Integer q = values[j] / values[pivot];
        for (std::size_t k = 0; k < n; ++k)
          if (basis[pivot][k] != 0) basis[j][k] -= q * basis[pivot][k];
        values[j] -= q * values[pivot];
        if (values[j] != 0) others = true;
      }
      if (!others) break;
    }
    const Integer g = pivot == basis.size() ? Integer(0) : values[pivot];

    if (target != nullptr && feasible) {
      Integer residual = *target - dot(row, particular);
      if (modulus == 0) {
        if (g == 0) {
          if (residual != 0) feasible = false;
        } else if (residual % g != 0) {
          feasible = false;
        } else {
          Integer c = residual / g;
          for (std::size_t k = 0; k < n; ++k) particular[k] += c * basis[pivot][k];
        }
      } else {
        residual = reduce_mod(residual, modulus);
        Integer gg = gcd_int(g, modulus);
        if (residual % gg != 0) {
          feasible = false;
        } else if (residual != 0) {
          Integer m2 = modulus / gg;
          Integer c = reduce_mod((residual / gg) * inverse_mod(g / gg, m2), m2);
          for (std::size_t k = 0; k < n; ++k) particular[k] += c * basis[pivot][k];
        }
      }
      reduce_vector(particular);
    }

    if (pivot == basis.size()) return;
    if (modulus == 0) {
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(pivot));
    } else {
      Integer f = modulus / gcd_int(g, modulus);
      if (f != 1)
        for (auto& x : basis[pivot]) x *= f;
    }
    if (exponent != 0) {
      for (auto& b : basis) reduce_vector(b);
      basis.erase(std::remove_if(basis.begin(), basis.end(),
                                 [](const IntVector& b) {
                                   return std::all_of(b.begin(), b.end(),
                                                      [](const Integer& x) { return x == 0; });
                                 }),
                  basis.end());
    }
  }

  void run(const IntMatrix& m, const IntVector& moduli, const IntVector* rhs) {
    if (moduli.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "moduli per row");
    if (rhs && rhs->size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length");
    std::vector<std::pair<std::size_t, Integer>> row;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      row.clear();
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (reduce_mod(m(r, c), moduli[r]) != 0) row.emplace_back(c, reduce_mod(m(r, c), moduli[r]));
      if (row.empty()) {
        if (rhs && reduce_mod((*rhs)[r], moduli[r]) != 0) feasible = false;
        continue;
      }
      constrain(row, moduli[r], rhs ? &(*rhs)[r] : nullptr);
    }
  }

  IntMatrix lattice_generators() const {
    std::vector<IntVector> cols = basis;
    if (exponent != 0) {
      for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = exponent;
        cols.push_back(std::move(e));
      }
    }
    return IntMatrix::from_columns(cols, n);
  }
};

}  // namespace

IntMatrix lattice_kernel(const IntMatrix& m, const IntVector& moduli) {
  CongruenceReducer red(m.cols(), moduli);
  red.run(m, moduli, nullptr);
  return red.lattice_generators();
}

std::optional<IntVector> solve_congruences(const IntMatrix& m, const IntVector& rhs,
                                           const IntVector& moduli) {
  CongruenceReducer red(m.cols(), moduli);
  red.run(m, moduli, &rhs);
  if (!red.feasible) return std::nullopt;
  return red.particular;
}

// -------------------------------------------------------------- Subgroup

Subgroup::Subgroup(CyclicSum ambient, IntMatrix generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  const std::size_t m = ambient_.rank();
  const std::size_t k = generators_.cols();
  if (generators_.rows() != m) throw Error(ErrorCode::DimensionMismatch, "generator length");
  if (!ambient_.is_finite()) throw std::invalid_argument("Subgroup requires a finite ambient group");
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < k; ++c) generators_(r, c) = reduce_mod(generators_(r, c), ambient_.moduli()[r]);

  // [G | diag(moduli)] drives both membership solving and the relation lattice.
  IntMatrix aug = IntMatrix::hstack(generators_, IntMatrix::diagonal(ambient_.moduli()));
  SmithDecomposition sd = smith_decompose(aug, false);
  solve_u_ = std::move(sd.U);
  solve_v_ = std::move(sd.V);
  solve_rank_ = sd.rank;
  solve_s_diag_ = IntMatrix(sd.rank, 1);
  for (std::size_t i = 0; i < sd.rank; ++i) solve_s_diag_(i, 0) = sd.S(i, i);

  // Relations among the generators: first k coordinates of ker_Z(aug).
  const std::size_t total = k + m;
  IntMatrix relations(k, total - solve_rank_);
  for (std::size_t j = solve_rank_; j < total; ++j)
    for (std::size_t r = 0; r < k; ++r) relations(r, j - solve_rank_) = solve_v_(r, j);

  SmithDecomposition rel = smith_decompose(relations, true);
  IntVector factors;
  for (std::size_t i = 0; i < k; ++i) {
    Integer d = i < rel.rank ? rel.S(i, i) : Integer(0);
    if (d == 0) throw std::logic_error("Subgroup: free summand in a finite ambient");
    if (d != 1) {
      factors.push_back(d);
      nontrivial_rows_.push_back(i);
    }
  }
  structure_ = FgAbelianGroup(factors);
  coord_u_ = std::move(rel.U);
  combination_ = IntMatrix(k, nontrivial_rows_.size());
  for (std::size_t j = 0; j < nontrivial_rows_.size(); ++j)
    for (std::size_t r = 0; r < k; ++r) combination_(r, j) = rel.U_inv(r, nontrivial_rows_[j]);
  inclusion_ = generators_ * combination_;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < inclusion_.cols(); ++c)
      inclusion_(r, c) = reduce_mod(inclusion_(r, c), ambient_.moduli()[r]);
}

std::optional<IntVector> Subgroup::preimage(const IntVector& element) const {
  const std::size_t m = ambient_.rank();
  const std::size_t k = generators_.cols();
  if (element.size() != m) throw Error(ErrorCode::DimensionMismatch, "element length");
  IntVector ue = solve_u_ * element;
  IntVector w(k + m, Integer(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (i < solve_rank_) {
      const Integer& s = solve_s_diag_(i, 0);
      if (ue[i] % s != 0) return std::nullopt;
      w[i] = ue[i] / s;
    } else if (ue[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector full = solve_v_ * w;
  full.resize(k);
  return full;
}

std::optional<IntVector> Subgroup::coordinates(const IntVector& element) const {
  auto pre = preimage(element);
  if (!pre) return std::nullopt;
  IntVector y = coord_u_ * *pre;
  IntVector coords(nontrivial_rows_.size());
  for (std::size_t j = 0; j < nontrivial_rows_.size(); ++j)
    coords[j] = reduce_mod(y[nontrivial_rows_[j]], structure_.invariant_factors()[j]);
  return coords;
}

IntVector Subgroup::element(const IntVector& coords) const {
  if (coords.size() != structure_.rank()) throw Error(ErrorCode::DimensionMismatch, "coordinates");
  return ambient_.reduce(inclusion_ * coords);
}

std::vector<IntVector> Subgroup::elements(std::size_t limit) const {
  Integer o = order();
  if (o > Integer(limit))
    throw Error(ErrorCode::OrderTooLarge, "subgroup of order " + o.str() + " exceeds enumeration limit");
  const std::size_t count = static_cast<std::size_t>(o);
  std::vector<IntVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(element(structure_.coordinates(i)));
  return out;
}

// -------------------------------------------------------------- Quotient

Quotient::Quotient(CyclicSum ambient, IntMatrix sub_generators) : ambient_(std::move(ambient)) {
  const std::size_t m = ambient_.rank();
  if (sub_generators.rows() != m) throw Error(ErrorCode::DimensionMismatch, "generator length");
  IntMatrix aug = IntMatrix::hstack(IntMatrix::diagonal(ambient_.moduli()), sub_generators);
  SmithDecomposition sd = smith_decompose(aug, true);
  IntVector factors;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Integer d = i < sd.rank ? sd.S(i, i) : Integer(0);
    if (d == 0) throw std::invalid_argument("Quotient: infinite quotient");
    if (d != 1) {
      factors.push_back(d);
      rows.push_back(i);
    }
  }
  structure_ = FgAbelianGroup(factors);
  projection_ = IntMatrix(rows.size(), m);
  lift_ = IntMatrix(m, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t c = 0; c < m; ++c) projection_(j, c) = sd.U(rows[j], c);
    for (std::size_t r = 0; r < m; ++r) lift_(r, j) = sd.U_inv(r, rows[j]);
  }
}

IntVector Quotient::project(const IntVector& x) const {
  IntVector y = projection_ * x;
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = reduce_mod(y[j], structure_.invariant_factors()[j]);
  return y;
}

IntVector Quotient::lift(const IntVector& coords) const { return ambient_.reduce(lift_ * coords); }

Subgroup hom_kernel(const AbelianHom& f) {
  IntMatrix gens = lattice_kernel(f.matrix(), f.target().moduli());
  return Subgroup(f.source(), std::move(gens));
}

Subgroup hom_image(const AbelianHom& f) { return Subgroup(f.target(), f.matrix()); }

Quotient quotient_invariants(const IntMatrix& sub_generators, const CyclicSum& ambient) {
  return Quotient(ambient, sub_generators);
}

// ------------------------------------------------------------ Cayley tables

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  CayleyTable t(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::DimensionMismatch, "table is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) t.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return t;
}

std::vector<std::vector<int>> CayleyTable::rows() const {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  return r;
}

AbelianDecomposition decompose_abelian(const CayleyTable& table) {
  const int n = table.n;
  if (n < 1) throw Error(ErrorCode::NotAGroup, "empty table");
  for (int v : table.data)
    if (v < 0 || v >= n) throw Error(ErrorCode::NotAGroup, "entry " + std::to_string(v) + " out of range");
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table(e, a) == a && table(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NotAGroup, "no identity element");
  if (identity != 0) throw Error(ErrorCode::IdentityNotZero, "identity is element " + std::to_string(identity));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table(table(a, b), c) != table(a, table(b, c)))
          throw Error(ErrorCode::NotAGroup, "associativity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) has_inverse = table(a, b) == 0;
    if (!has_inverse) throw Error(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table(a, b) != table(b, a))
        throw Error(ErrorCode::NotAbelian, "(" + std::to_string(a) + "," + std::to_string(b) + ")");

  // Greedy generating set; every element gets coordinates over it, and each
  // new generator contributes one relation m*g_i = (combination of earlier).
  std::vector<int> gens;
  std::vector<std::vector<long long>> coords(static_cast<std::size_t>(n));
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  coords[0] = {};
  reached[0] = true;
  std::vector<int> span{0};
  std::vector<IntVector> relations;
  while (static_cast<int>(span.size()) < n) {
    int g = -1;
    for (int a = 0; a < n && g < 0; ++a)
      if (!reached[static_cast<std::size_t>(a)]) g = a;
    const std::size_t gi = gens.size();
    gens.push_back(g);
    for (auto& c : coords) c.resize(gi + 1, 0);
    // multiples of g until one falls back into the old span
    std::vector<int> old_span = span;
    int multiple = g;
    long long m = 1;
    while (!reached[static_cast<std::size_t>(multiple)]) {
      for (int s : old_span) {
        int x = table(s, multiple);
        auto& cx = coords[static_cast<std::size_t>(x)];
        cx = coords[static_cast<std::size_t>(s)];
        cx.resize(gi + 1, 0);
        cx[gi] = m;
        reached[static_cast<std::size_t>(x)] = true;
        span.push_back(x);
      }
      multiple = table(multiple, g);
      ++m;
    }
    IntVector rel(gi + 1, Integer(0));
    const auto& back = coords[static_cast<std::size_t>(multiple)];
    for (std::size_t j = 0; j < gi; ++j) rel[j] = -Integer(j < back.size() ? back[j] : 0);
    rel[gi] = m;
    relations.push_back(std::move(rel));
  }
  const std::size_t k = gens.size();
  for (auto& r : relations) r.resize(k, Integer(0));
  IntMatrix rel = IntMatrix::from_columns(relations, k);
  SmithDecomposition sd = smith_decompose(rel, false);
  IntVector factors;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& d = sd.S(i, i);
    if (d != 1) {
      factors.push_back(d);
      rows.push_back(i);
    }
  }
  AbelianDecomposition out;
  out.group = FgAbelianGroup(factors);
  out.to_canonical.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    IntVector x(k, Integer(0));
    const auto& ca = coords[static_cast<std::size_t>(a)];
    for (std::size_t j = 0; j < k && j < ca.size(); ++j) x[j] = ca[j];
    IntVector y = sd.U * x;
    IntVector c(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) c[j] = y[rows[j]];
    out.to_canonical[static_cast<std::size_t>(a)] = out.group.index_of(c);
  }
  return out;
}

CayleyTable canonical_addition_table(const FgAbelianGroup& g) {
  const std::size_t n = g.carrier_size();
  CayleyTable t(static_cast<int>(n));
  std::vector<IntVector> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = g.coordinates(i);
  const CyclicSum cs = g.as_cyclic_sum();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t.at(static_cast<int>(a), static_cast<int>(b)) = static_cast<int>(g.index_of(cs.add(coords[a], coords[b])));
  return t;
}

}  // namespace brace
