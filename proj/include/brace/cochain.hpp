#pragma once

// I-valued functions on H^k stored as full tables (row-major, first
// coordinate most significant), entries are carrier indices of I.

#include <compare>
#include <vector>

#include "brace/action.hpp"
#include "brace/algebra.hpp"

namespace brace {

struct Cochain {
  int arity = 0;
  int h_order = 0;
  std::vector<int> values;

  Cochain() = default;
  Cochain(int arity_, int h_order_);

  std::size_t size() const noexcept { return values.size(); }
  std::size_t index(const std::vector<int>& tuple) const;
  std::vector<int> tuple(std::size_t idx) const;
  int at(const std::vector<int>& tuple) const { return values[index(tuple)]; }
  int& at(const std::vector<int>& tuple) { return values[index(tuple)]; }
  // shorthands for small arities
  int operator()(int a) const { return values[static_cast<std::size_t>(a)]; }
  int operator()(int a, int b) const { return values[static_cast<std::size_t>(a) * h_order + b]; }
  int operator()(int a, int b, int c) const {
    return values[(static_cast<std::size_t>(a) * h_order + b) * h_order + c];
  }
  int& set(int a) { return values[static_cast<std::size_t>(a)]; }
  int& set(int a, int b) { return values[static_cast<std::size_t>(a) * h_order + b]; }

  bool is_zero() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
  friend auto operator<=>(const Cochain& a, const Cochain& b) { return a.values <=> b.values; }
};

/// (beta, tau): beta of bidegree (0,2), tau of bidegree (1,1). This order is
/// used everywhere, including file formats.
struct Cocycle2 {
  Cochain beta;
  Cochain tau;

  static Cocycle2 zero(int h_order) { return {Cochain(2, h_order), Cochain(2, h_order)}; }
  friend bool operator==(const Cocycle2&, const Cocycle2&) = default;
  friend auto operator<=>(const Cocycle2& a, const Cocycle2& b) {
    if (auto c = a.beta <=> b.beta; c != 0) return c;
    return a.tau <=> b.tau;
  }
};

Cochain cochain_add(const Module& m, const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Module& m, const Cochain& a, const Cochain& b);
Cocycle2 cocycle_add(const Module& m, const Cocycle2& a, const Cocycle2& b);
Cocycle2 cocycle_sub(const Module& m, const Cocycle2& a, const Cocycle2& b);
/// Applies an additive map of I to every value.
Cochain cochain_map(const Perm& f, const Cochain& c);

bool is_degenerate(const std::vector<int>& tuple);
bool is_normalized(const Cochain& c);
bool is_symmetric(const Cochain& c);

/// Coordinates of Fun(nondegenerate k-tuples, I): one block of I-coordinates
/// per nondegenerate tuple, tuples in lexicographic order.
class CochainLayout {
 public:
  CochainLayout() = default;
  CochainLayout(int h_order, int arity, const Module& i);

  int h_order() const noexcept { return h_order_; }
  int arity() const noexcept { return arity_; }
  /// Full-table indices of the nondegenerate tuples.
  const std::vector<std::size_t>& tuples() const noexcept { return tuples_; }
  const CyclicSum& ambient() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return ambient_.rank(); }

  IntVector to_vector(const Cochain& c) const;
  Cochain from_vector(const IntVector& v) const;
  /// Cochain with the j-th canonical generator of I at the given nondegenerate tuple.
  Cochain basis(std::size_t tuple_pos, int coord) const;

 private:
  int h_order_ = 0;
  int arity_ = 0;
  Module module_;
  std::vector<std::size_t> tuples_;
  CyclicSum ambient_;
};

struct CochainSpace {
  int i = 0;
  int j = 0;
  CochainLayout layout;
  /// C_N^{i,j} inside Fun(nondegenerate tuples, I).
  Subgroup subgroup;
  /// generator labels: (tuple, I-coordinate) per ambient coordinate
  std::vector<std::pair<std::vector<int>, int>> labels;
};

/// Normalized functions H^{i+j} -> I whose linearisation vanishes on every
/// partial shuffle of the last j coordinates.
CochainSpace cochain_space(const FiniteBrace& h, const Module& i, int deg_i, int deg_j);

/// Partial shuffle defect rows of bidegree (i,j); each entry lists signed
/// tuples (sign, full-table index) summing to zero.
std::vector<std::vector<std::pair<int, std::size_t>>> shuffle_relations(int h_order, int deg_i, int deg_j);

}  // namespace brace
