#pragma once

// Hot loops with a serial reference and an OpenMP version. Both return the
// same answer: witnesses are the lexicographically least failure, result
// lists are sorted.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "brace/algebra.hpp"

namespace brace::kernels {

using Triple = std::array<int, 3>;

std::optional<Triple> associativity_failure_serial(const CayleyTable& t);
std::optional<Triple> associativity_failure_parallel(const CayleyTable& t);

// a o (b + c) + a != a o b + a o c
std::optional<Triple> compatibility_failure_serial(const CayleyTable& add, const CayleyTable& circ);
std::optional<Triple> compatibility_failure_parallel(const CayleyTable& add, const CayleyTable& circ);

// Automorphisms of (add, circ) determined by images of additive generators.
// Every element x != 0 is reached as add(steps[x].first, generators[steps[x].second]).
struct AutomorphismSearch {
  const CayleyTable* add = nullptr;
  const CayleyTable* circ = nullptr;  // may equal add
  std::vector<int> generators;
  std::vector<std::vector<int>> candidates;  // per generator
  std::vector<std::pair<int, int>> steps;    // per element, in a valid build order
  std::vector<int> order;                    // elements in build order, order[0] == 0
};

// circ == nullptr searches additive automorphisms only.
AutomorphismSearch make_automorphism_search(const CayleyTable& add, const CayleyTable* circ);

std::vector<std::vector<int>> automorphism_search_serial(const AutomorphismSearch& s);
std::vector<std::vector<int>> automorphism_search_parallel(const AutomorphismSearch& s);

// out[i] = f(i) for i < count
std::vector<int> tabulate_serial(std::size_t count, const std::function<int(std::size_t)>& f);
std::vector<int> tabulate_parallel(std::size_t count, const std::function<int(std::size_t)>& f);

// Defaults used by the library.
inline std::optional<Triple> associativity_failure(const CayleyTable& t) { return associativity_failure_parallel(t); }
inline std::optional<Triple> compatibility_failure(const CayleyTable& a, const CayleyTable& c) {
  return compatibility_failure_parallel(a, c);
}
inline std::vector<std::vector<int>> automorphism_search(const AutomorphismSearch& s) {
  return automorphism_search_parallel(s);
}
inline std::vector<int> tabulate(std::size_t count, const std::function<int(std::size_t)>& f) {
  return tabulate_parallel(count, f);
}

}  // namespace brace::kernels
