#include "brace/brace.hpp"

namespace brace {

// r(x, y) = (lambda_x(y), lambda^{-1}_{lambda_x(y)}(x)), the solution attached
// to a left brace.
YbeSolution ybe_solution(const FiniteBrace& e) {
  const int n = e.order();
  std::vector<Perm> lam_inv(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) lam_inv[static_cast<std::size_t>(a)] = inverse(lambda_map(e, a));
  YbeSolution s;
  s.n = n;
  s.r.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int u = e.lambda(x, y);
      s.r[static_cast<std::size_t>(x) * n + y] = {u, lam_inv[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)]};
    }
  return s;
}

YbeCheck check_ybe(const YbeSolution& r) {
  const int n = r.n;
  YbeCheck c;
  for (int x = 0; x < n && c.braid; ++x)
    for (int y = 0; y < n && c.braid; ++y)
      for (int z = 0; z < n; ++z) {
        // left: r12 r23 r12
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        // right: r23 r12 r23
        auto [q1, w1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, w3] = r(q2, w1);
        if (a3 != p2 || b3 != q3 || c2 != w3) {
          c.braid = false;
          c.witnesses.push_back({"braid", {x, y, z}});
          break;
        }
      }
  for (int x = 0; x < n && c.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = r(x, y);
      if (r(u, v) != std::pair<int, int>{x, y}) {
        c.involutive = false;
        c.witnesses.push_back({"involutive", {x, y}});
        break;
      }
    }
  for (int x = 0; x < n && c.nondegenerate; ++x) {
    std::vector<char> left(static_cast<std::size_t>(n), 0), right(static_cast<std::size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
      left[static_cast<std::size_t>(r(x, y).first)] = 1;
      right[static_cast<std::size_t>(r(y, x).second)] = 1;
    }
    for (int k = 0; k < n; ++k)
      if (!left[static_cast<std::size_t>(k)] || !right[static_cast<std::size_t>(k)]) {
        c.nondegenerate = false;
        c.witnesses.push_back({"nondegenerate", {x}});
        break;
      }
  }
  return c;
}

}  // namespace brace
