#include "brace/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace brace::kernels {

namespace {

std::optional<Triple> assoc_row(const CayleyTable& t, int a) {
  const int n = t.n;
  for (int b = 0; b < n; ++b) {
    const int ab = t(a, b);
    for (int c = 0; c < n; ++c)
      if (t(ab, c) != t(a, t(b, c))) return Triple{a, b, c};
  }
  return std::nullopt;
}

std::optional<Triple> compat_row(const CayleyTable& add, const CayleyTable& circ, int a) {
  const int n = add.n;
  for (int b = 0; b < n; ++b) {
    const int ab = circ(a, b);
    for (int c = 0; c < n; ++c)
      if (add(circ(a, add(b, c)), a) != add(ab, circ(a, c))) return Triple{a, b, c};
  }
  return std::nullopt;
}

// First failing row wins; rows are independent so a min-reduction on the
// row index keeps the answer identical to the serial scan.
template <class RowFn>
std::optional<Triple> least_failure_parallel(int n, RowFn row) {
  int best = std::numeric_limits<int>::max();
  std::vector<std::optional<Triple>> found(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int a = 0; a < n; ++a) {
    auto w = row(a);
    if (w) {
      found[static_cast<std::size_t>(a)] = w;
      best = std::min(best, a);
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return found[static_cast<std::size_t>(best)];
}

bool try_assignment(const AutomorphismSearch& s, const std::vector<int>& images, std::vector<int>& map,
                    std::vector<char>& seen) {
  const CayleyTable& add = *s.add;
  const CayleyTable& circ = *s.circ;
  const int n = add.n;
  std::fill(seen.begin(), seen.end(), 0);
  map[0] = 0;
  seen[0] = 1;
  for (std::size_t k = 1; k < s.order.size(); ++k) {
    const int x = s.order[k];
    const auto [prev, gen] = s.steps[static_cast<std::size_t>(x)];
    const int y = add(map[static_cast<std::size_t>(prev)], images[static_cast<std::size_t>(gen)]);
    if (seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = 1;
    map[static_cast<std::size_t>(x)] = y;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto ma = static_cast<std::size_t>(map[static_cast<std::size_t>(a)]);
      const auto mb = static_cast<std::size_t>(map[static_cast<std::size_t>(b)]);
      if (map[static_cast<std::size_t>(add(a, b))] != add(static_cast<int>(ma), static_cast<int>(mb)))
        return false;
      if (&circ != &add &&
          map[static_cast<std::size_t>(circ(a, b))] != circ(static_cast<int>(ma), static_cast<int>(mb)))
        return false;
    }
  return true;
}

std::size_t search_space(const AutomorphismSearch& s) {
  std::size_t total = 1;
  for (const auto& c : s.candidates) total *= c.size();
  return total;
}

void decode(const AutomorphismSearch& s, std::size_t idx, std::vector<int>& images) {
  for (std::size_t g = s.candidates.size(); g-- > 0;) {
    const std::size_t k = s.candidates[g].size();
    images[g] = s.candidates[g][idx % k];
    idx /= k;
  }
}

}  // namespace

std::optional<Triple> associativity_failure_serial(const CayleyTable& t) {
  for (int a = 0; a < t.n; ++a)
    if (auto w = assoc_row(t, a)) return w;
  return std::nullopt;
}

std::optional<Triple> associativity_failure_parallel(const CayleyTable& t) {
  return least_failure_parallel(t.n, [&](int a) { return assoc_row(t, a); });
}

std::optional<Triple> compatibility_failure_serial(const CayleyTable& add, const CayleyTable& circ) {
  for (int a = 0; a < add.n; ++a)
    if (auto w = compat_row(add, circ, a)) return w;
  return std::nullopt;
}

std::optional<Triple> compatibility_failure_parallel(const CayleyTable& add, const CayleyTable& circ) {
  return least_failure_parallel(add.n, [&](int a) { return compat_row(add, circ, a); });
}

std::vector<std::vector<int>> automorphism_search_serial(const AutomorphismSearch& s) {
  std::vector<std::vector<int>> out;
  const std::size_t total = search_space(s);
  std::vector<int> images(s.candidates.size()), map(static_cast<std::size_t>(s.add->n));
  std::vector<char> seen(static_cast<std::size_t>(s.add->n));
  for (std::size_t idx = 0; idx < total; ++idx) {
    decode(s, idx, images);
    if (try_assignment(s, images, map, seen)) out.push_back(map);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphism_search_parallel(const AutomorphismSearch& s) {
  const std::size_t total = search_space(s);
  std::vector<std::vector<std::vector<int>>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    std::vector<int> images(s.candidates.size()), map(static_cast<std::size_t>(s.add->n));
    std::vector<char> seen(static_cast<std::size_t>(s.add->n));
    auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (std::size_t idx = 0; idx < total; ++idx) {
      decode(s, idx, images);
      if (try_assignment(s, images, map, seen)) mine.push_back(map);
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> tabulate_serial(std::size_t count, const std::function<int(std::size_t)>& f) {
  std::vector<int> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

std::vector<int> tabulate_parallel(std::size_t count, const std::function<int(std::size_t)>& f) {
  std::vector<int> out(count);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

}  // namespace brace::kernels
