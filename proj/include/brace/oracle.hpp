#pragma once

// Brute-force counterparts of the linear-algebra answers. They enumerate
// tables directly from the formulas and never touch a Smith form.

#include <optional>
#include <vector>

#include "brace/extension.hpp"

namespace brace::oracle {

/// Every normalized (beta, tau) with beta symmetric and d2 = 0, sorted.
/// beta and tau are searched separately against their own components with
/// early pruning, then joined on the mixed component.
std::vector<Cocycle2> cocycles(const ActionPair& a);

/// d1 of every normalized theta, sorted and deduplicated.
std::vector<Cocycle2> coboundaries(const ActionPair& a);

/// First normalized theta (in enumeration order) with d1 theta = c.
std::optional<Cochain> coboundary_witness(const ActionPair& a, const Cocycle2& c);

/// Number of classes |Z^2| / |B^2| from the enumerations.
std::size_t h2_order(const ActionPair& a);

}  // namespace brace::oracle
