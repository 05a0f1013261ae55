#include "brace/general_complex.hpp"

#include <algorithm>

#include "brace/cohomology.hpp"
#include "brace/error.hpp"
#include "brace/kernels.hpp"

namespace brace {

namespace {

int circ_all(const FiniteBrace& h, const std::vector<int>& t, std::size_t count) {
  int x = 0;
  for (std::size_t k = 0; k < count; ++k) x = h.circ(x, t[k]);
  return x;
}

}  // namespace

Cochain face(const ActionPair& a, const Cochain& f, int i) {
  const int n = f.arity;
  if (f.h_order != a.H.order()) throw Error(ErrorCode::DimensionMismatch, "cochain over another brace");
  if (n < 1 || i < 0 || i > n + 1) throw std::invalid_argument("face index out of range");
  Cochain out(n + 1, f.h_order);
  std::vector<Perm> nu_inv;
  if (i == n + 1)
    for (const auto& p : a.nu) nu_inv.push_back(inverse(p));
  out.values = kernels::tabulate(out.size(), [&](std::size_t idx) {
    const std::vector<int> t = out.tuple(idx);
    if (i == 0) return a.nu_of(t[0], f.at(std::vector<int>(t.begin() + 1, t.end())));
    if (i <= n) {
      std::vector<int> u;
      u.reserve(static_cast<std::size_t>(n));
      for (int k = 0; k < n + 1; ++k) {
        if (k == i - 1) {
          u.push_back(a.H.circ(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k + 1)]));
          ++k;
        } else {
          u.push_back(t[static_cast<std::size_t>(k)]);
        }
      }
      return f.at(u);
    }
    const int head = circ_all(a.H, t, static_cast<std::size_t>(n));
    const int all = a.H.circ(head, t[static_cast<std::size_t>(n)]);
    const int v = f.at(std::vector<int>(t.begin(), t.end() - 1));
    return a.nu_of(all, a.sigma_of(t[static_cast<std::size_t>(n)], nu_inv[static_cast<std::size_t>(head)][static_cast<std::size_t>(v)]));
  });
  return out;
}

Cochain general_differential(const ActionPair& a, const Cochain& f) {
  Cochain out(f.arity + 1, f.h_order);
  for (int i = 0; i <= f.arity + 1; ++i) {
    Cochain term = face(a, f, i);
    out = (i % 2 == 0) ? cochain_add(a.I, out, term) : cochain_sub(a.I, out, term);
  }
  return out;
}

bool is_linear_last(const FiniteBrace& h, const Module& i, const Cochain& f) {
  const int n = f.h_order;
  const std::size_t heads = f.size() / static_cast<std::size_t>(n);
  for (std::size_t base = 0; base < heads; ++base)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const std::size_t row = base * static_cast<std::size_t>(n);
        if (f.values[row + static_cast<std::size_t>(h.add(x, y))] !=
            i.add(f.values[row + static_cast<std::size_t>(x)], f.values[row + static_cast<std::size_t>(y)]))
          return false;
      }
  return true;
}

bool in_rcn(const FiniteBrace& h, const Module& i, const Cochain& f) {
  return is_linear_last(h, i, f) && is_normalized(f);
}

Cochain to_group_cocycle(const ActionPair& a, const Cochain& f) {
  if (f.arity != 2 || f.h_order != a.H.order()) throw Error(ErrorCode::DimensionMismatch, "expects a 2-cochain over H");
  if (!is_cocycle(a, Cocycle2{Cochain(2, f.h_order), f}))
    throw Error(ErrorCode::NotACocycle, "(0, f) is not a brace 2-cocycle");
  Cochain out(2, f.h_order);
  for (int h1 = 0; h1 < f.h_order; ++h1)
    for (int h2 = 0; h2 < f.h_order; ++h2) {
      const Perm& nu = a.nu[static_cast<std::size_t>(a.H.circ(h1, h2))];
      const int v = f(h1, h2);
      out.set(h1, h2) = static_cast<int>(std::find(nu.begin(), nu.end(), v) - nu.begin());
    }
  return out;
}

bool is_group_cocycle(const ActionPair& a, const Cochain& f) {
  const int n = a.H.order();
  const Module& I = a.I;
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3) {
        const int lhs = I.add(a.sigma_of(g3, f(g1, g2)), f(a.H.circ(g1, g2), g3));
        const int rhs = I.add(f(g1, a.H.circ(g2, g3)), f(g2, g3));
        if (lhs != rhs) return false;
      }
  return true;
}

Cochain group_coboundary(const ActionPair& a, const Cochain& t) {
  const int n = a.H.order();
  Cochain out(2, n);
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      out.set(g1, g2) = a.I.sub(a.I.add(a.sigma_of(g2, t(g1)), t(g2)), t(a.H.circ(g1, g2)));
  return out;
}

Cochain pushforward(const Perm& alpha, const Perm& zeta, const ActionPair& a, const ActionPair& ap, const Cochain& f) {
  if (!is_compatible_pair(alpha, zeta, a, ap))
    throw Error(ErrorCode::IncompatiblePair, "(alpha, zeta) is not compatible with the actions");
  Cochain out(f.arity, ap.H.order());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::vector<int> t = out.tuple(idx);
    for (int& x : t) x = alpha[static_cast<std::size_t>(x)];
    out.values[idx] = zeta[static_cast<std::size_t>(f.at(t))];
  }
  return out;
}

Cochain restrict_cochain(const FiniteBrace& h, const std::vector<int>& k, const Cochain& f) {
  BraceSubset s = classify_subset(h, k);
  if (!s.is_left_ideal) throw Error(ErrorCode::NotALeftIdeal, "restriction needs a left ideal");
  const int m = static_cast<int>(s.elements.size());
  Cochain out(f.arity, m);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::vector<int> t = out.tuple(idx);
    for (int& x : t) x = s.elements[static_cast<std::size_t>(x)];
    out.values[idx] = f.at(t);
  }
  return out;
}

}  // namespace brace
