#pragma once

// Finite left braces as pairs of Cayley tables on {0, ..., n-1}, identity 0.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "brace/algebra.hpp"

namespace brace {

/// A permutation or, more generally, a map between carriers given by images.
using Perm = std::vector<int>;

Perm compose(const Perm& outer, const Perm& inner);  // outer after inner
Perm inverse(const Perm& p);
Perm identity_perm(int n);
bool is_permutation(const Perm& p);

struct Witness {
  std::string axiom;
  std::vector<int> elements;
  std::string to_string() const;
};

struct Report {
  std::vector<Witness> failures;
  bool ok() const { return failures.empty(); }
  std::string to_string() const;
};

class FiniteBrace {
 public:
  FiniteBrace() = default;
  /// Validates with verify_brace and throws on the first failure.
  FiniteBrace(CayleyTable add, CayleyTable circ, std::string name = {});
  static FiniteBrace unchecked(CayleyTable add, CayleyTable circ, std::string name = {});
  static FiniteBrace trivial(const FgAbelianGroup& g, std::string name = {});
  static FiniteBrace trivial_cyclic(int n);

  int order() const noexcept { return add_.n; }
  const CayleyTable& add_table() const noexcept { return add_; }
  const CayleyTable& circ_table() const noexcept { return circ_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int add(int a, int b) const { return add_(a, b); }
  int circ(int a, int b) const { return circ_(a, b); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add_(a, neg(b)); }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// lambda_a(b) = a o b - a
  int lambda(int a, int b) const { return sub(circ_(a, b), a); }
  bool is_trivial() const { return add_ == circ_; }
  int additive_order(int a) const;

  /// Compares tables only.
  friend bool operator==(const FiniteBrace& x, const FiniteBrace& y) {
    return x.add_ == y.add_ && x.circ_ == y.circ_;
  }

 private:
  void index_inverses();
  CayleyTable add_;
  CayleyTable circ_;
  std::string name_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

/// Every failed axiom with a lexicographically least witness.
Report verify_brace(const CayleyTable& add, const CayleyTable& circ);

Perm lambda_map(const FiniteBrace& e, int a);

struct BraceSubset {
  std::vector<int> elements;  // sorted
  bool is_subbrace = false;
  bool is_left_ideal = false;
  bool is_ideal = false;
  bool is_central = false;
};

BraceSubset classify_subset(const FiniteBrace& e, std::vector<int> subset);

/// The sub-brace on a closed subset; element k of the result is subset[k]
/// (subset sorted, so 0 stays first).
FiniteBrace sub_brace(const FiniteBrace& e, const std::vector<int>& subset);

struct BraceMorphism {
  FiniteBrace source;
  FiniteBrace target;
  Perm map;
};

bool is_brace_morphism(const FiniteBrace& source, const FiniteBrace& target, const Perm& map);
std::vector<int> morphism_kernel(const BraceMorphism& f);

struct QuotientBrace {
  FiniteBrace brace;
  BraceMorphism projection;
};

/// Cosets are numbered by their least element.
QuotientBrace quotient_brace(const FiniteBrace& e, const std::vector<int>& ideal);

BraceSubset sylow_left_ideal(const FiniteBrace& e, int p);

std::vector<int> prime_divisors(int n);

/// BRACE_MAX_ORDER when set, otherwise 16.
int default_search_bound();
/// BRACE_MAX_ENUM_ORDER when set, otherwise 6.
int default_enumeration_bound();

/// Autb(E), sorted lexicographically as image tables.
std::vector<Perm> brace_automorphisms(const FiniteBrace& e, int bound = default_search_bound());
/// Aut(I,+) for a finite abelian group given in canonical form.
std::vector<Perm> additive_automorphisms(const FgAbelianGroup& g, int bound = default_search_bound());

/// All braces of order n up to isomorphism, in canonical form, sorted.
std::vector<FiniteBrace> enumerate_braces(int n, int bound = default_enumeration_bound());
/// Canonical relabeling (minimal circ table over automorphisms of the addition).
FiniteBrace canonical_form(const FiniteBrace& e);

struct YbeSolution {
  int n = 0;
  // r(x, y) at index x * n + y
  std::vector<std::pair<int, int>> r;
  std::pair<int, int> operator()(int x, int y) const { return r[static_cast<std::size_t>(x) * n + y]; }
};

struct YbeCheck {
  bool braid = true;
  bool involutive = true;
  bool nondegenerate = true;
  std::vector<Witness> witnesses;
  bool ok() const { return braid && involutive && nondegenerate; }
};

YbeSolution ybe_solution(const FiniteBrace& e);
YbeCheck check_ybe(const YbeSolution& r);

}  // namespace brace
