#pragma once

// Built-in instances: trivial cyclic braces, the worked example on
// H = Z/2 with I = (Z/2)^2, and small counterexamples.

#include <string>
#include <vector>

#include "brace/action.hpp"
#include "brace/cochain.hpp"

namespace brace::catalog {

FiniteBrace trivial_cyclic(int n);

/// (Z/2)^2; element (a, b) has carrier index 2a + b.
Module klein_module();

/// nu_h(a,b) = (a + h b, b), sigma_h(a,b) = (a, b + h a) on H = Z/2.
ActionPair worked_pair();
/// The formula read literally: nu_h(a,b) = (a+b+h, b), sigma_h(a,b) = (a, b+a+h).
/// Not an action pair (nu_0 is not the identity).
ActionPair literal_pair();
ActionPair worked_trivial_pair();
/// H = Z/2, I = Z/3, nu_1 = inversion, sigma trivial: not a good pair.
ActionPair z3_inversion_pair();

/// H = Z/6 trivial brace, I = Z/2, trivial actions.
ActionPair z6_z2_trivial_pair();

/// Cocycle on H = Z/2 determined by its values at (1,1), given as I-coordinates.
Cocycle2 cocycle_at_11(const Module& i, const IntVector& beta11, const IntVector& tau11);

struct NamedCocycle {
  std::string name;
  Cocycle2 cocycle;
};

/// (beta_i, tau_j) for the worked pair: beta_1 = tau_1 = 0, beta_2 = (1,0), tau_2 = (0,1).
std::vector<NamedCocycle> worked_cocycles();
/// (beta_i, tau_j), 1 <= i, j <= 4, for trivial actions: (0,0), (0,1), (1,0), (1,1).
std::vector<NamedCocycle> trivial_action_cocycles();

}  // namespace brace::catalog
