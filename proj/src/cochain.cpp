#include "brace/cochain.hpp"

#include <algorithm>
#include <numeric>

#include "brace/error.hpp"

namespace brace {

namespace {

std::size_t power(int base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

Cochain::Cochain(int arity_, int h_order_)
    : arity(arity_), h_order(h_order_), values(power(h_order_, arity_), 0) {}

std::size_t Cochain::index(const std::vector<int>& t) const {
  if (t.size() != static_cast<std::size_t>(arity)) throw Error(ErrorCode::DimensionMismatch, "tuple arity");
  std::size_t idx = 0;
  for (int x : t) {
    if (x < 0 || x >= h_order) throw Error(ErrorCode::IndexOutOfRange, "tuple entry " + std::to_string(x));
    idx = idx * static_cast<std::size_t>(h_order) + static_cast<std::size_t>(x);
  }
  return idx;
}

std::vector<int> Cochain::tuple(std::size_t idx) const {
  std::vector<int> t(static_cast<std::size_t>(arity));
  for (int k = arity; k-- > 0;) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(h_order));
    idx /= static_cast<std::size_t>(h_order);
  }
  return t;
}

bool Cochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

Cochain cochain_add(const Module& m, const Cochain& a, const Cochain& b) {
  if (a.arity != b.arity || a.h_order != b.h_order) throw Error(ErrorCode::DimensionMismatch, "cochain shapes");
  Cochain r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = m.add(a.values[i], b.values[i]);
  return r;
}

Cochain cochain_sub(const Module& m, const Cochain& a, const Cochain& b) {
  if (a.arity != b.arity || a.h_order != b.h_order) throw Error(ErrorCode::DimensionMismatch, "cochain shapes");
  Cochain r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = m.sub(a.values[i], b.values[i]);
  return r;
}

Cocycle2 cocycle_add(const Module& m, const Cocycle2& a, const Cocycle2& b) {
  return {cochain_add(m, a.beta, b.beta), cochain_add(m, a.tau, b.tau)};
}

Cocycle2 cocycle_sub(const Module& m, const Cocycle2& a, const Cocycle2& b) {
  return {cochain_sub(m, a.beta, b.beta), cochain_sub(m, a.tau, b.tau)};
}

Cochain cochain_map(const Perm& f, const Cochain& c) {
  Cochain r = c;
  for (auto& v : r.values) v = f[static_cast<std::size_t>(v)];
  return r;
}

bool is_degenerate(const std::vector<int>& t) {
  return std::find(t.begin(), t.end(), 0) != t.end();
}

bool is_normalized(const Cochain& c) {
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (c.values[i] != 0 && is_degenerate(c.tuple(i))) return false;
  return true;
}

bool is_symmetric(const Cochain& c) {
  if (c.arity != 2) return true;
  for (int a = 0; a < c.h_order; ++a)
    for (int b = a + 1; b < c.h_order; ++b)
      if (c(a, b) != c(b, a)) return false;
  return true;
}

CochainLayout::CochainLayout(int h_order, int arity, const Module& i)
    : h_order_(h_order), arity_(arity), module_(i) {
  Cochain shape(arity, h_order);
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (!is_degenerate(shape.tuple(k))) tuples_.push_back(k);
  ambient_ = CyclicSum::repeated(i.group().invariant_factors(), tuples_.size());
}

IntVector CochainLayout::to_vector(const Cochain& c) const {
  if (c.arity != arity_ || c.h_order != h_order_) throw Error(ErrorCode::DimensionMismatch, "cochain shape");
  const std::size_t r = static_cast<std::size_t>(module_.rank());
  IntVector v(tuples_.size() * r);
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    const IntVector& x = module_.coordinates(c.values[tuples_[t]]);
    for (std::size_t k = 0; k < r; ++k) v[t * r + k] = x[k];
  }
  return v;
}

Cochain CochainLayout::from_vector(const IntVector& v) const {
  const std::size_t r = static_cast<std::size_t>(module_.rank());
  if (v.size() != tuples_.size() * r) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  Cochain c(arity_, h_order_);
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    IntVector x(v.begin() + static_cast<std::ptrdiff_t>(t * r), v.begin() + static_cast<std::ptrdiff_t>((t + 1) * r));
    c.values[tuples_[t]] = module_.element(x);
  }
  return c;
}

Cochain CochainLayout::basis(std::size_t tuple_pos, int coord) const {
  Cochain c(arity_, h_order_);
  c.values[tuples_[tuple_pos]] = module_.generator(coord);
  return c;
}

std::vector<std::vector<std::pair<int, std::size_t>>> shuffle_relations(int h_order, int deg_i, int deg_j) {
  std::vector<std::vector<std::pair<int, std::size_t>>> rows;
  const int n = deg_i + deg_j;
  Cochain shape(n, h_order);
  for (int r = 1; r <= deg_j - 1; ++r) {
    // (r, j-r) shuffles of {0..j-1}: choose the positions p(0..r-1)
    std::vector<std::pair<int, std::vector<int>>> shuffles;  // sign, p^{-1}
    std::vector<int> mask(static_cast<std::size_t>(deg_j), 0);
    std::fill(mask.begin(), mask.begin() + r, 1);
    std::sort(mask.begin(), mask.end());
    do {
      std::vector<int> p(static_cast<std::size_t>(deg_j));
      int lo = 0, hi = r;
      for (int pos = 0; pos < deg_j; ++pos)
        if (mask[static_cast<std::size_t>(pos)]) p[static_cast<std::size_t>(lo++)] = pos;
        else p[static_cast<std::size_t>(hi++)] = pos;
      int inversions = 0;
      for (int a = 0; a < deg_j; ++a)
        for (int b = a + 1; b < deg_j; ++b)
          if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inversions;
      std::vector<int> pinv(static_cast<std::size_t>(deg_j));
      for (int a = 0; a < deg_j; ++a) pinv[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])] = a;
      shuffles.push_back({inversions % 2 ? -1 : 1, pinv});
    } while (std::next_permutation(mask.begin(), mask.end()));

    for (std::size_t base = 0; base < shape.size(); ++base) {
      const std::vector<int> t = shape.tuple(base);
      std::vector<std::pair<int, std::size_t>> row;
      for (const auto& [sign, pinv] : shuffles) {
        std::vector<int> u(t.begin(), t.begin() + deg_i);
        for (int k = 0; k < deg_j; ++k) u.push_back(t[static_cast<std::size_t>(deg_i + pinv[static_cast<std::size_t>(k)])]);
        row.emplace_back(sign, shape.index(u));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

CochainSpace cochain_space(const FiniteBrace& h, const Module& i, int deg_i, int deg_j) {
  if (deg_i < 0 || deg_j < 1) throw std::invalid_argument("bidegree needs i >= 0, j >= 1");
  CochainSpace s;
  s.i = deg_i;
  s.j = deg_j;
  s.layout = CochainLayout(h.order(), deg_i + deg_j, i);
  const std::size_t r = static_cast<std::size_t>(i.rank());
  const std::size_t dim = s.layout.dimension();
  std::vector<long> pos_of(Cochain(deg_i + deg_j, h.order()).size(), -1);
  for (std::size_t t = 0; t < s.layout.tuples().size(); ++t) {
    pos_of[s.layout.tuples()[t]] = static_cast<long>(t);
    Cochain shape(deg_i + deg_j, h.order());
    for (std::size_t k = 0; k < r; ++k) s.labels.push_back({shape.tuple(s.layout.tuples()[t]), static_cast<int>(k)});
  }
  auto rel = shuffle_relations(h.order(), deg_i, deg_j);
  IntMatrix m(rel.size() * r, dim);
  IntVector moduli(rel.size() * r);
  for (std::size_t row = 0; row < rel.size(); ++row)
    for (std::size_t k = 0; k < r; ++k) {
      moduli[row * r + k] = i.group().invariant_factors()[k];
      for (const auto& [sign, idx] : rel[row]) {
        const long p = pos_of[idx];
        if (p >= 0) m(row * r + k, static_cast<std::size_t>(p) * r + k) += sign;
      }
    }
  s.subgroup = Subgroup(s.layout.ambient(), rel.empty() ? IntMatrix::identity(dim) : lattice_kernel(m, moduli));
  return s;
}

}  // namespace brace
