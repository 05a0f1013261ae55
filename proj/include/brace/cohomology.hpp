#pragma once

// The low-degree complex C^0_N -> C^1_N -> C^2_N -> C^3_N and its cohomology.

#include <optional>
#include <vector>

#include "brace/action.hpp"
#include "brace/cochain.hpp"

namespace brace {

/// The three components of d2, each a table over H^3.
struct Cochain3 {
  Cochain v;  // d_v^{0,2} beta
  Cochain m;  // d_h^{0,2} beta - d_v^{1,1} tau
  Cochain h;  // d_h^{1,1} tau
  bool is_zero() const { return v.is_zero() && m.is_zero() && h.is_zero(); }
};

/// I_nu, in carrier order.
std::vector<int> fixed_subgroup(const ActionPair& a);

Cochain d0(const ActionPair& a, int y);
Cocycle2 d1(const ActionPair& a, const Cochain& theta);
Cochain3 d2(const ActionPair& a, const Cocycle2& c);
/// d2 without the C^2_N membership check, for arbitrary tables.
Cochain3 d2_unchecked(const ActionPair& a, const Cocycle2& c);

bool in_c2n(const Cocycle2& c);
bool is_cocycle(const ActionPair& a, const Cocycle2& c);

/// Coordinates on C^2 = Fun(nondeg pairs, I) + Fun(nondeg pairs, I): beta block first.
class Layout2 {
 public:
  Layout2() = default;
  Layout2(int h_order, const Module& i) : pairs_(h_order, 2, i) {
    ambient_ = CyclicSum::direct_sum(pairs_.ambient(), pairs_.ambient());
  }
  const CyclicSum& ambient() const noexcept { return ambient_; }
  const CochainLayout& pairs() const noexcept { return pairs_; }
  std::size_t half() const noexcept { return pairs_.dimension(); }
  IntVector to_vector(const Cocycle2& c) const;
  Cocycle2 from_vector(const IntVector& v) const;

 private:
  CochainLayout pairs_;
  CyclicSum ambient_;
};

class FirstCohomology {
 public:
  explicit FirstCohomology(ActionPair a);

  const ActionPair& actions() const noexcept { return a_; }
  const CochainLayout& layout() const noexcept { return layout_; }
  const Subgroup& z1() const noexcept { return z1_; }
  const Subgroup& b1() const noexcept { return b1_; }
  const FgAbelianGroup& structure() const noexcept { return q_.structure(); }
  /// All derivations, sorted.
  std::vector<Cochain> derivations() const;
  bool is_derivation(const Cochain& theta) const;

 private:
  ActionPair a_;
  CochainLayout layout_;
  Subgroup z1_;
  Subgroup b1_;
  Quotient q_;
};

class SecondCohomology {
 public:
  explicit SecondCohomology(ActionPair a);

  const ActionPair& actions() const noexcept { return a_; }
  const Layout2& layout() const noexcept { return layout_; }
  const Subgroup& z2() const noexcept { return z2_; }
  const Subgroup& b2() const noexcept { return b2_; }
  const FgAbelianGroup& structure() const noexcept { return q_.structure(); }

  bool is_cocycle(const Cocycle2& c) const;
  /// Class coordinates in structure(); throws NotACocycle.
  IntVector class_of(const Cocycle2& c) const;
  bool cohomologous(const Cocycle2& c1, const Cocycle2& c2) const;
  /// theta with d1(theta) = c, when c is a coboundary.
  std::optional<Cochain> coboundary_witness(const Cocycle2& c) const;
  /// Lexicographically least cocycle of the class.
  Cocycle2 representative(const IntVector& coords) const;
  /// One per class, in carrier order of structure().
  std::vector<Cocycle2> representatives() const;
  /// All elements of Z^2_N / B^2_N as cocycles, sorted.
  std::vector<Cocycle2> cocycles() const;
  std::vector<Cocycle2> coboundaries() const;

  /// The linear map C^1 -> C^2 (columns per theta coordinate).
  const IntMatrix& d1_matrix() const noexcept { return d1_; }
  /// Stacked d2 and symmetry defect on C^2, with row moduli.
  const IntMatrix& d2_matrix() const noexcept { return d2_; }
  const IntVector& d2_moduli() const noexcept { return d2_moduli_; }
  const CochainLayout& theta_layout() const noexcept { return theta_layout_; }

 private:
  void index_classes() const;

  ActionPair a_;
  Layout2 layout_;
  CochainLayout theta_layout_;
  IntMatrix d1_;
  IntMatrix d2_;
  IntVector d2_moduli_;
  Subgroup z2_;
  Subgroup b2_;
  Quotient q_;
  mutable std::vector<Cocycle2> reps_;
};

/// RH^2_N: the classes of H^2_N containing a cocycle with beta = 0.
class RestrictedCohomology {
 public:
  explicit RestrictedCohomology(const SecondCohomology& h2);

  const FgAbelianGroup& structure() const noexcept { return sub_.structure(); }
  /// RH^2_N as a subgroup of H^2_N.
  const Subgroup& in_h2() const noexcept { return sub_; }
  /// Coordinates in structure() of the class of (0, tau); throws NotACocycle.
  IntVector class_of(const Cochain& tau) const;
  /// Lexicographically least tau per class, in carrier order.
  const std::vector<Cochain>& representatives() const noexcept { return reps_; }
  /// Every tau with (0, tau) a cocycle, sorted.
  std::vector<Cochain> cocycles() const;

 private:
  SecondCohomology h2_;
  Subgroup zt_;  // on the tau block
  Subgroup sub_;
  std::vector<Cochain> reps_;
};

Subgroup z1(const ActionPair& a);
Subgroup z2(const ActionPair& a);
Subgroup b2(const ActionPair& a);
SecondCohomology h2(const ActionPair& a);
FirstCohomology h1(const ActionPair& a);
RestrictedCohomology rh2(const ActionPair& a);

}  // namespace brace
