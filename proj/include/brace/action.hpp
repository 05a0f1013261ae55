#pragma once

// Coefficient modules (I, +) on their canonical carrier and pairs of actions
// (nu, sigma) of (H, o) on them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "brace/algebra.hpp"
#include "brace/brace.hpp"

namespace brace {

class Module {
 public:
  Module() : Module(FgAbelianGroup{}) {}
  explicit Module(FgAbelianGroup g);

  const FgAbelianGroup& group() const noexcept { return group_; }
  int order() const noexcept { return add_.n; }
  int rank() const noexcept { return static_cast<int>(group_.rank()); }
  const CayleyTable& add_table() const noexcept { return add_; }

  int add(int a, int b) const { return add_(a, b); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add_(a, neg(b)); }
  int scale(long long k, int a) const;

  const IntVector& coordinates(int a) const { return coords_[static_cast<std::size_t>(a)]; }
  int element(const IntVector& coords) const { return static_cast<int>(group_.index_of(coords)); }
  /// Index of the j-th canonical generator.
  int generator(int j) const { return generators_[static_cast<std::size_t>(j)]; }

  bool is_additive(const Perm& f) const;
  /// Matrix of an additive map in canonical coordinates (column j = image of generator j).
  IntMatrix matrix_of(const Perm& f) const;
  FiniteBrace as_brace() const { return FiniteBrace::trivial(group_); }

  friend bool operator==(const Module& a, const Module& b) { return a.group_ == b.group_; }

 private:
  FgAbelianGroup group_;
  CayleyTable add_;
  std::vector<int> neg_;
  std::vector<IntVector> coords_;
  std::vector<int> generators_;
};

struct ActionPair {
  FiniteBrace H;
  Module I;
  std::vector<Perm> nu;
  std::vector<Perm> sigma;
  std::string comment;

  int nu_of(int h, int y) const { return nu[static_cast<std::size_t>(h)][static_cast<std::size_t>(y)]; }
  int sigma_of(int h, int y) const { return sigma[static_cast<std::size_t>(h)][static_cast<std::size_t>(y)]; }
  bool is_trivial() const;

  friend bool operator==(const ActionPair& a, const ActionPair& b) {
    return a.H == b.H && a.I == b.I && a.nu == b.nu && a.sigma == b.sigma;
  }
};

ActionPair trivial_actions(const FiniteBrace& h, const Module& i);

/// Report on shapes, bijectivity, additivity, nu_0 = sigma_0 = id and the
/// (anti-)homomorphism laws.
Report verify_action_pair(const ActionPair& a);

struct GoodPairResult {
  bool good = true;
  std::optional<std::array<int, 3>> witness;  // (h1, h2, y)
};

/// Throws InvalidActionPair when verify_action_pair fails.
GoodPairResult is_good_pair(const ActionPair& a);
/// Throws NotGoodPair (or InvalidActionPair) unless the pair is good.
void require_good_pair(const ActionPair& a);

/// I_phi: nu'_h = nu_{phi(h)}, sigma'_h = sigma_{phi(h)}.
ActionPair twist_module(const ActionPair& a, const Perm& phi);

/// zeta(nu_{alpha(h')}(y)) = nu'_{h'}(zeta(y)) and likewise for sigma.
/// alpha: H' -> H, zeta: I -> I'.
bool is_compatible_pair(const Perm& alpha, const Perm& zeta, const ActionPair& a, const ActionPair& a_prime);

/// Every (nu, sigma) with nu a left and sigma a right action of (H, o) by
/// automorphisms of I. Pairs are sorted; the good ones are not filtered.
std::vector<ActionPair> enumerate_action_pairs(const FiniteBrace& h, const Module& i);

/// Restriction of the actions to a sub-brace K of H (elements sorted).
ActionPair restrict_actions(const ActionPair& a, const std::vector<int>& k);

}  // namespace brace
