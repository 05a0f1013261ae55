#pragma once

// The complex C^n(H; I) = Fun(H^n, I) with the faces d_{n,i}, its
// subcomplexes RC^n and RC^n_N, the map to group cochains and the maps
// induced by compatible pairs.

#include <vector>

#include "brace/action.hpp"
#include "brace/cochain.hpp"

namespace brace {

/// d_{n,i} f for 0 <= i <= n+1.
Cochain face(const ActionPair& a, const Cochain& f, int i);
/// d^n f = sum (-1)^i d_{n,i} f.
Cochain general_differential(const ActionPair& a, const Cochain& f);

/// f(.., a + b) = f(.., a) + f(.., b) in the last coordinate.
bool is_linear_last(const FiniteBrace& h, const Module& i, const Cochain& f);
/// RC^n_N membership: linear in the last coordinate and normalized.
bool in_rcn(const FiniteBrace& h, const Module& i, const Cochain& f);

/// f'(h1, h2) = nu^{-1}_{h1 o h2}(f(h1, h2)); f must make (0, f) a 2-cocycle.
Cochain to_group_cocycle(const ActionPair& a, const Cochain& f);
/// sigma_{h3} f(h1,h2) + f(h1h2, h3) = f(h1, h2h3) + f(h2, h3) for the right action sigma.
bool is_group_cocycle(const ActionPair& a, const Cochain& f);
/// (dt)(g1, g2) = sigma_{g2} t(g1) + t(g2) - t(g1 g2).
Cochain group_coboundary(const ActionPair& a, const Cochain& t);

/// f'(h'...) = zeta(f(alpha(h')...)); alpha: H' -> H, zeta: I -> I'.
Cochain pushforward(const Perm& alpha, const Perm& zeta, const ActionPair& a, const ActionPair& a_prime,
                    const Cochain& f);

/// Restriction of f to the tuples of a left ideal K (elements sorted; the
/// result is indexed by positions in K).
Cochain restrict_cochain(const FiniteBrace& h, const std::vector<int>& k, const Cochain& f);

}  // namespace brace
