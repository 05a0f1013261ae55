#pragma once

// Extensions 0 -> I -> E -> H -> 0 with I a trivial-brace ideal.

#include <optional>
#include <vector>

#include "brace/action.hpp"
#include "brace/cochain.hpp"
#include "brace/cohomology.hpp"

namespace brace {

struct Extension {
  FiniteBrace E;
  FiniteBrace H;
  Module I;
  Perm iota;     // I -> E
  Perm proj;     // E -> H
  Perm section;  // H -> E, proj o section = id, section(0) = 0
};

/// Validates an externally supplied extension. H is read off from proj;
/// without a section the lexicographically least one is used.
Extension make_extension(FiniteBrace e, Module i, Perm iota, Perm proj, std::optional<Perm> section = std::nullopt);

/// Carrier (h, y) -> h * |I| + y, section s(h) = (h, 0).
Extension build_extension(const ActionPair& a, const Cocycle2& c);

struct Extracted {
  ActionPair actions;
  Cocycle2 cocycle;
};

Extracted extract_cocycle(const Extension& x);
Extracted extract_cocycle(const Extension& x, const Perm& section);
ActionPair actions_from_extension(const Extension& x);

/// Every st-section; throws OrderTooLarge above the limit.
std::vector<Perm> all_sections(const Extension& x, std::size_t limit = 1u << 16);
/// s'(h) = s(h) + iota(theta(h))
Perm perturbed_section(const Extension& x, const Cochain& theta);

struct Equivalence {
  Perm map;  // E1 -> E2
  Cochain theta;
};

/// Brace morphism E1 -> E2 with map o iota1 = iota2 and proj2 o map = proj1.
bool is_equivalence(const Extension& x1, const Extension& x2, const Perm& map);

/// Solves d1(theta) = c1 - c2 and returns phi(s1(h) + iota1(y)) = s2(h) + iota2(y + theta(h)).
std::optional<Equivalence> are_equivalent(const Extension& x1, const Extension& x2);
/// Same answer by trying every normalized theta.
std::optional<Equivalence> are_equivalent_bruteforce(const Extension& x1, const Extension& x2);

struct ClassifiedExtension {
  IntVector class_coords;
  Cocycle2 cocycle;
  Extension extension;
};

/// One extension per class of H^2_N, built from the least representative.
std::vector<ClassifiedExtension> classify_extensions(const ActionPair& a);
std::vector<ClassifiedExtension> classify_extensions(const SecondCohomology& h2);

bool is_central_extension(const Extension& x);

/// An additive st-section if one exists.
std::optional<Perm> splits_additively(const Extension& x);
std::optional<Perm> splits_additively_bruteforce(const Extension& x);

/// 0 -> I -> R -> P -> 0 with R the preimage of a left ideal P of H.
Extension restrict_extension(const Extension& x, const std::vector<int>& p);

}  // namespace brace
