#include "brace/cohomology.hpp"

#include <algorithm>
#include <map>

#include "brace/error.hpp"

namespace brace {

namespace {

std::vector<Perm> nu_inverses(const ActionPair& a) {
  std::vector<Perm> r;
  r.reserve(a.nu.size());
  for (const auto& p : a.nu) r.push_back(inverse(p));
  return r;
}

void check_shape(const Cochain& c, int arity, int h_order, const char* what) {
  if (c.arity != arity || c.h_order != h_order)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong shape");
}

// Coordinates of all values of a table, one block of I-coordinates per entry.
void append_coordinates(const Module& m, const Cochain& c, IntVector& out) {
  for (int v : c.values) {
    const IntVector& x = m.coordinates(v);
    out.insert(out.end(), x.begin(), x.end());
  }
}

constexpr std::size_t kEnumerationLimit = std::size_t{1} << 20;

}  // namespace

std::vector<int> fixed_subgroup(const ActionPair& a) {
  std::vector<int> out;
  for (int y = 0; y < a.I.order(); ++y) {
    bool fixed = true;
    for (int h = 0; h < a.H.order() && fixed; ++h) fixed = a.nu_of(h, y) == y;
    if (fixed) out.push_back(y);
  }
  return out;
}

Cochain d0(const ActionPair& a, int y) {
  if (y < 0 || y >= a.I.order()) throw Error(ErrorCode::IndexOutOfRange, "module element " + std::to_string(y));
  for (int h = 0; h < a.H.order(); ++h)
    if (a.nu_of(h, y) != y)
      throw Error(ErrorCode::NotInFixedSubgroup, "nu_" + std::to_string(h) + " moves " + std::to_string(y));
  Cochain f(1, a.H.order());
  for (int h = 0; h < a.H.order(); ++h) f.set(h) = a.I.sub(a.nu_of(h, a.sigma_of(h, y)), y);
  return f;
}

Cocycle2 d1(const ActionPair& a, const Cochain& theta) {
  const int n = a.H.order();
  check_shape(theta, 1, n, "theta");
  if (theta(0) != 0) throw Error(ErrorCode::NotNormalized, "theta(0) != 0");
  const auto nu_inv = nu_inverses(a);
  const Module& I = a.I;
  Cocycle2 r = Cocycle2::zero(n);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2) {
      r.beta.set(h1, h2) = I.add(I.sub(theta(h2), theta(a.H.add(h1, h2))), theta(h1));
      const int hh = a.H.circ(h1, h2);
      const int twist = a.nu_of(hh, a.sigma_of(h2, nu_inv[static_cast<std::size_t>(h1)][static_cast<std::size_t>(theta(h1))]));
      r.tau.set(h1, h2) = I.add(I.sub(a.nu_of(h1, theta(h2)), theta(hh)), twist);
    }
  return r;
}

bool in_c2n(const Cocycle2& c) {
  return c.beta.arity == 2 && c.tau.arity == 2 && is_normalized(c.beta) && is_normalized(c.tau) &&
         is_symmetric(c.beta);
}

Cochain3 d2_unchecked(const ActionPair& a, const Cocycle2& c) {
  const int n = a.H.order();
  check_shape(c.beta, 2, n, "beta");
  check_shape(c.tau, 2, n, "tau");
  const auto nu_inv = nu_inverses(a);
  const Module& I = a.I;
  const FiniteBrace& H = a.H;
  const Cochain& b = c.beta;
  const Cochain& t = c.tau;
  Cochain3 r{Cochain(3, n), Cochain(3, n), Cochain(3, n)};
  std::size_t idx = 0;
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      for (int h3 = 0; h3 < n; ++h3, ++idx) {
        r.v.values[idx] = I.sub(I.add(I.sub(b(h2, h3), b(H.add(h1, h2), h3)), b(h1, H.add(h2, h3))), b(h1, h2));
        const int dh_beta = I.add(I.sub(a.nu_of(h1, b(h2, h3)), b(H.circ(h1, h2), H.circ(h1, h3))),
                                  b(h1, H.circ(h1, H.add(h2, h3))));
        const int dv_tau = I.add(I.sub(t(h1, h2), t(h1, H.add(h2, h3))), t(h1, h3));
        r.m.values[idx] = I.sub(dh_beta, dv_tau);
        const int h12 = H.circ(h1, h2);
        const int h123 = H.circ(h12, h3);
        const int twist =
            a.nu_of(h123, a.sigma_of(h3, nu_inv[static_cast<std::size_t>(h12)][static_cast<std::size_t>(t(h1, h2))]));
        r.h.values[idx] = I.sub(I.add(I.sub(a.nu_of(h1, t(h2, h3)), t(h12, h3)), t(h1, H.circ(h2, h3))), twist);
      }
  return r;
}

Cochain3 d2(const ActionPair& a, const Cocycle2& c) {
  if (!in_c2n(c)) throw Error(ErrorCode::NotInC2N, "cochain pair is not normalized/symmetric");
  return d2_unchecked(a, c);
}

bool is_cocycle(const ActionPair& a, const Cocycle2& c) { return in_c2n(c) && d2_unchecked(a, c).is_zero(); }

IntVector Layout2::to_vector(const Cocycle2& c) const {
  IntVector v = pairs_.to_vector(c.beta);
  IntVector t = pairs_.to_vector(c.tau);
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

Cocycle2 Layout2::from_vector(const IntVector& v) const {
  const std::size_t h = half();
  if (v.size() != 2 * h) throw Error(ErrorCode::DimensionMismatch, "cocycle vector length");
  return {pairs_.from_vector(IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(h))),
          pairs_.from_vector(IntVector(v.begin() + static_cast<std::ptrdiff_t>(h), v.end()))};
}

namespace {

IntMatrix build_d1_matrix(const ActionPair& a, const CochainLayout& theta_layout, const Layout2& layout) {
  const int r = a.I.rank();
  IntMatrix m(layout.ambient().rank(), theta_layout.dimension());
  for (std::size_t t = 0; t < theta_layout.tuples().size(); ++t)
    for (int k = 0; k < r; ++k) {
      IntVector col = layout.to_vector(d1(a, theta_layout.basis(t, k)));
      const std::size_t j = t * static_cast<std::size_t>(r) + static_cast<std::size_t>(k);
      for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
  return m;
}

}  // namespace

// ------------------------------------------------------------------ H^1

FirstCohomology::FirstCohomology(ActionPair a) : a_(std::move(a)) {
  require_good_pair(a_);
  const int n = a_.H.order();
  layout_ = CochainLayout(n, 1, a_.I);
  Layout2 l2(n, a_.I);
  IntMatrix m = build_d1_matrix(a_, layout_, l2);
  z1_ = Subgroup(layout_.ambient(), lattice_kernel(m, l2.ambient().moduli()));
  std::vector<IntVector> cols;
  for (int y : fixed_subgroup(a_)) cols.push_back(layout_.to_vector(d0(a_, y)));
  b1_ = Subgroup(layout_.ambient(), IntMatrix::from_columns(cols, layout_.dimension()));
  std::vector<IntVector> zc;
  for (const auto& c : cols) {
    auto x = z1_.coordinates(c);
    if (!x) throw std::logic_error("d1 d0 != 0");
    zc.push_back(*x);
  }
  q_ = Quotient(z1_.structure().as_cyclic_sum(), IntMatrix::from_columns(zc, z1_.structure().rank()));
}

std::vector<Cochain> FirstCohomology::derivations() const {
  std::vector<Cochain> out;
  for (const auto& v : z1_.elements(kEnumerationLimit)) out.push_back(layout_.from_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool FirstCohomology::is_derivation(const Cochain& theta) const {
  if (theta.arity != 1 || theta(0) != 0) return false;
  return z1_.contains(layout_.to_vector(theta));
}

// ------------------------------------------------------------------ H^2

SecondCohomology::SecondCohomology(ActionPair a) : a_(std::move(a)) {
  require_good_pair(a_);
  const int n = a_.H.order();
  const Module& I = a_.I;
  const int r = I.rank();
  const auto& factors = I.group().invariant_factors();
  layout_ = Layout2(n, I);
  theta_layout_ = CochainLayout(n, 1, I);
  d1_ = build_d1_matrix(a_, theta_layout_, layout_);

  // d2 columns from basis cocycles; rows: three H^3 tables then beta symmetry.
  const std::size_t half = layout_.half();
  const std::size_t triples = static_cast<std::size_t>(n) * n * n;
  const std::size_t d2_rows = 3 * triples * static_cast<std::size_t>(r);
  const auto& pairs = layout_.pairs().tuples();
  std::vector<std::pair<std::size_t, std::size_t>> sym;  // positions of (a,b), (b,a), a<b
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::size_t x = pairs[p] / static_cast<std::size_t>(n), y = pairs[p] % static_cast<std::size_t>(n);
    if (x < y) {
      const std::size_t q = static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), y * n + x) - pairs.begin());
      sym.emplace_back(p, q);
    }
  }
  d2_ = IntMatrix(d2_rows + sym.size() * static_cast<std::size_t>(r), 2 * half);
  d2_moduli_.assign(d2_.rows(), Integer(0));
  for (std::size_t row = 0; row < d2_.rows(); ++row) d2_moduli_[row] = factors[row % static_cast<std::size_t>(r)];
  for (std::size_t col = 0; col < 2 * half; ++col) {
    const bool is_tau = col >= half;
    const std::size_t local = is_tau ? col - half : col;
    Cochain e = layout_.pairs().basis(local / static_cast<std::size_t>(r), static_cast<int>(local % static_cast<std::size_t>(r)));
    Cocycle2 c = Cocycle2::zero(n);
    (is_tau ? c.tau : c.beta) = e;
    Cochain3 out = d2_unchecked(a_, c);
    IntVector v;
    v.reserve(d2_rows);
    append_coordinates(I, out.v, v);
    append_coordinates(I, out.m, v);
    append_coordinates(I, out.h, v);
    for (std::size_t i = 0; i < d2_rows; ++i) d2_(i, col) = v[i];
  }
  for (std::size_t s = 0; s < sym.size(); ++s)
    for (int k = 0; k < r; ++k) {
      const std::size_t row = d2_rows + s * static_cast<std::size_t>(r) + static_cast<std::size_t>(k);
      d2_(row, sym[s].first * static_cast<std::size_t>(r) + static_cast<std::size_t>(k)) += 1;
      d2_(row, sym[s].second * static_cast<std::size_t>(r) + static_cast<std::size_t>(k)) -= 1;
    }

  z2_ = Subgroup(layout_.ambient(), lattice_kernel(d2_, d2_moduli_));
  b2_ = Subgroup(layout_.ambient(), d1_);
  std::vector<IntVector> zc;
  for (std::size_t j = 0; j < d1_.cols(); ++j) {
    auto x = z2_.coordinates(d1_.column(j));
    if (!x) throw std::logic_error("d2 d1 != 0");
    zc.push_back(*x);
  }
  q_ = Quotient(z2_.structure().as_cyclic_sum(), IntMatrix::from_columns(zc, z2_.structure().rank()));
}

bool SecondCohomology::is_cocycle(const Cocycle2& c) const { return brace::is_cocycle(a_, c); }

IntVector SecondCohomology::class_of(const Cocycle2& c) const {
  if (!is_cocycle(c)) throw Error(ErrorCode::NotACocycle, "pair is not a 2-cocycle");
  auto z = z2_.coordinates(layout_.to_vector(c));
  if (!z) throw std::logic_error("cocycle outside the computed Z^2");
  return q_.project(*z);
}

bool SecondCohomology::cohomologous(const Cocycle2& c1, const Cocycle2& c2) const {
  return class_of(c1) == class_of(c2);
}

std::optional<Cochain> SecondCohomology::coboundary_witness(const Cocycle2& c) const {
  auto y = b2_.preimage(layout_.to_vector(c));
  if (!y) return std::nullopt;
  return theta_layout_.from_vector(theta_layout_.ambient().reduce(*y));
}

void SecondCohomology::index_classes() const {
  if (!reps_.empty()) return;
  const std::size_t classes = structure().carrier_size();
  reps_.assign(classes, Cocycle2{});
  std::vector<char> have(classes, 0);
  if (z2_.order() <= Integer(kEnumerationLimit)) {
    for (const auto& v : z2_.elements(kEnumerationLimit)) {
      Cocycle2 c = layout_.from_vector(v);
      const std::size_t k = structure().index_of(q_.project(*z2_.coordinates(v)));
      if (!have[k] || c < reps_[k]) {
        reps_[k] = std::move(c);
        have[k] = 1;
      }
    }
  } else {
    // too many cocycles to search: use the lifted element of each class
    for (std::size_t k = 0; k < classes; ++k)
      reps_[k] = layout_.from_vector(z2_.element(q_.lift(structure().coordinates(k))));
  }
}

Cocycle2 SecondCohomology::representative(const IntVector& coords) const {
  index_classes();
  return reps_[structure().index_of(coords)];
}

std::vector<Cocycle2> SecondCohomology::representatives() const {
  index_classes();
  return reps_;
}

std::vector<Cocycle2> SecondCohomology::cocycles() const {
  std::vector<Cocycle2> out;
  for (const auto& v : z2_.elements(kEnumerationLimit)) out.push_back(layout_.from_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cocycle2> SecondCohomology::coboundaries() const {
  std::vector<Cocycle2> out;
  for (const auto& v : b2_.elements(kEnumerationLimit)) out.push_back(layout_.from_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ RH^2

RestrictedCohomology::RestrictedCohomology(const SecondCohomology& h2) : h2_(h2) {
  const std::size_t half = h2_.layout().half();
  const IntMatrix& m = h2_.d2_matrix();
  IntMatrix tau_cols = m.column_block(half, half);
  zt_ = Subgroup(h2_.layout().pairs().ambient(), lattice_kernel(tau_cols, h2_.d2_moduli()));
  const int n = h2_.actions().H.order();
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < zt_.inclusion().cols(); ++j) {
    Cocycle2 c{Cochain(2, n), h2_.layout().pairs().from_vector(zt_.inclusion().column(j))};
    cols.push_back(h2_.class_of(c));
  }
  sub_ = Subgroup(h2_.structure().as_cyclic_sum(), IntMatrix::from_columns(cols, h2_.structure().rank()));
  const std::size_t classes = sub_.structure().carrier_size();
  reps_.assign(classes, Cochain{});
  std::vector<char> have(classes, 0);
  for (const auto& v : zt_.elements(kEnumerationLimit)) {
    Cochain tau = h2_.layout().pairs().from_vector(v);
    const std::size_t k = sub_.structure().index_of(class_of(tau));
    if (!have[k] || tau < reps_[k]) {
      reps_[k] = std::move(tau);
      have[k] = 1;
    }
  }
}

IntVector RestrictedCohomology::class_of(const Cochain& tau) const {
  Cocycle2 c{Cochain(2, h2_.actions().H.order()), tau};
  auto x = sub_.coordinates(h2_.class_of(c));
  if (!x) throw std::logic_error("beta = 0 class outside RH^2");
  return *x;
}

std::vector<Cochain> RestrictedCohomology::cocycles() const {
  std::vector<Cochain> out;
  for (const auto& v : zt_.elements(kEnumerationLimit)) out.push_back(h2_.layout().pairs().from_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup z1(const ActionPair& a) { return FirstCohomology(a).z1(); }
Subgroup z2(const ActionPair& a) { return SecondCohomology(a).z2(); }
Subgroup b2(const ActionPair& a) { return SecondCohomology(a).b2(); }
SecondCohomology h2(const ActionPair& a) { return SecondCohomology(a); }
FirstCohomology h1(const ActionPair& a) { return FirstCohomology(a); }
RestrictedCohomology rh2(const ActionPair& a) { return RestrictedCohomology(SecondCohomology(a)); }

}  // namespace brace
