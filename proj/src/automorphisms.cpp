#include <algorithm>
#include <cstdlib>
#include <deque>

#include "brace/brace.hpp"
#include "brace/error.hpp"
#include "brace/kernels.hpp"

namespace brace {

namespace {

int env_bound(const char* var, int fallback) {
  const char* v = std::getenv(var);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || x <= 0) return fallback;
  return static_cast<int>(x);
}

int circ_order(const CayleyTable& circ, int a) {
  int k = 1;
  for (int x = a; x != 0; x = circ(x, a)) ++k;
  return k;
}

int add_order(const CayleyTable& add, int a) { return circ_order(add, a); }

}  // namespace

kernels::AutomorphismSearch kernels::make_automorphism_search(const CayleyTable& add, const CayleyTable* circ) {
  const int n = add.n;
  AbelianDecomposition dec = decompose_abelian(add);
  std::vector<int> from_canonical(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) from_canonical[dec.to_canonical[static_cast<std::size_t>(x)]] = x;

  kernels::AutomorphismSearch s;
  s.add = &add;
  s.circ = circ ? circ : &add;
  const std::size_t r = dec.group.rank();
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, Integer(0));
    e[i] = 1;
    s.generators.push_back(from_canonical[dec.group.index_of(e)]);
  }
  // Candidate images keep the additive order and, when circ differs, the circ order.
  for (int g : s.generators) {
    std::vector<int> cand;
    for (int x = 1; x < n; ++x) {
      if (add_order(add, x) != add_order(add, g)) continue;
      if (circ && circ_order(*circ, x) != circ_order(*circ, g)) continue;
      cand.push_back(x);
    }
    s.candidates.push_back(std::move(cand));
  }
  s.steps.assign(static_cast<std::size_t>(n), {0, 0});
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    s.order.push_back(x);
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      const int y = add(x, s.generators[i]);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      s.steps[static_cast<std::size_t>(y)] = {x, static_cast<int>(i)};
      queue.push_back(y);
    }
  }
  return s;
}

namespace {

std::vector<Perm> search(const CayleyTable& add, const CayleyTable* circ) {
  if (add.n == 1) return {Perm{0}};
  return kernels::automorphism_search(kernels::make_automorphism_search(add, circ));
}

}  // namespace

int default_search_bound() { return env_bound("BRACE_MAX_ORDER", 16); }
int default_enumeration_bound() { return env_bound("BRACE_MAX_ENUM_ORDER", 6); }

std::vector<Perm> brace_automorphisms(const FiniteBrace& e, int bound) {
  if (e.order() > bound)
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(e.order()) + " exceeds search bound " + std::to_string(bound));
  return search(e.add_table(), e.is_trivial() ? nullptr : &e.circ_table());
}

std::vector<Perm> additive_automorphisms(const FgAbelianGroup& g, int bound) {
  const std::size_t n = g.carrier_size();
  if (n > static_cast<std::size_t>(bound))
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds search bound " + std::to_string(bound));
  CayleyTable t = canonical_addition_table(g);
  return search(t, nullptr);
}

}  // namespace brace
