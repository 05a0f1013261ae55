#include "brace/brace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "brace/error.hpp"
#include "brace/kernels.hpp"

namespace brace {

Perm compose(const Perm& outer, const Perm& inner) {
  Perm r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[static_cast<std::size_t>(inner[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

std::string Witness::to_string() const {
  std::ostringstream os;
  os << axiom << " at (";
  for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? ", " : "") << elements[i];
  os << ')';
  return os.str();
}

std::string Report::to_string() const {
  if (ok()) return "valid\n";
  std::string s;
  for (const auto& w : failures) s += w.to_string() + "\n";
  return s;
}

namespace {

bool in_range(const CayleyTable& t) {
  return std::all_of(t.data.begin(), t.data.end(), [&](int v) { return v >= 0 && v < t.n; });
}

void check_group(const CayleyTable& t, const std::string& tag, bool abelian, Report& r) {
  const int n = t.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t(a, b) < 0 || t(a, b) >= n) {
        r.failures.push_back({tag + ".range", {a, b}});
        return;
      }
  for (int a = 0; a < n; ++a)
    if (t(0, a) != a || t(a, 0) != a) {
      r.failures.push_back({tag + ".identity", {a}});
      break;
    }
  if (auto w = kernels::associativity_failure(t)) r.failures.push_back({tag + ".associativity", {(*w)[0], (*w)[1], (*w)[2]}});
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = t(a, b) == 0 && t(b, a) == 0;
    if (!found) {
      r.failures.push_back({tag + ".inverse", {a}});
      break;
    }
  }
  if (abelian) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (t(a, b) != t(b, a)) {
          r.failures.push_back({tag + ".commutativity", {a, b}});
          return;
        }
  }
}

ErrorCode code_for(const Witness& w) {
  const std::string& a = w.axiom;
  if (a == "add.commutativity") return ErrorCode::NotAbelian;
  if (a.size() > 9 && a.compare(a.size() - 9, 9, ".identity") == 0) return ErrorCode::IdentityNotZero;
  if (a == "compatibility") return ErrorCode::NotABrace;
  return ErrorCode::NotAGroup;
}

}  // namespace

Report verify_brace(const CayleyTable& add, const CayleyTable& circ) {
  if (add.n != circ.n) throw Error(ErrorCode::DimensionMismatch, "add and circ tables differ in size");
  if (add.n < 1) throw Error(ErrorCode::DimensionMismatch, "empty carrier");
  Report r;
  check_group(add, "add", true, r);
  check_group(circ, "circ", false, r);
  if (in_range(add) && in_range(circ))
    if (auto w = kernels::compatibility_failure(add, circ))
      r.failures.push_back({"compatibility", {(*w)[0], (*w)[1], (*w)[2]}});
  return r;
}

FiniteBrace::FiniteBrace(CayleyTable add, CayleyTable circ, std::string name)
    : add_(std::move(add)), circ_(std::move(circ)), name_(std::move(name)) {
  Report r = verify_brace(add_, circ_);
  if (!r.ok()) throw Error(code_for(r.failures.front()), r.failures.front().to_string());
  index_inverses();
}

FiniteBrace FiniteBrace::unchecked(CayleyTable add, CayleyTable circ, std::string name) {
  FiniteBrace e;
  e.add_ = std::move(add);
  e.circ_ = std::move(circ);
  e.name_ = std::move(name);
  e.index_inverses();
  return e;
}

FiniteBrace FiniteBrace::trivial(const FgAbelianGroup& g, std::string name) {
  CayleyTable t = canonical_addition_table(g);
  if (name.empty()) name = "trivial " + g.to_string();
  return unchecked(t, t, std::move(name));
}

FiniteBrace FiniteBrace::trivial_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("trivial_cyclic: n >= 1");
  CayleyTable t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  return unchecked(t, t, "trivial Z/" + std::to_string(n));
}

void FiniteBrace::index_inverses() {
  const int n = add_.n;
  neg_.assign(static_cast<std::size_t>(n), 0);
  inv_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (add_(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
      if (circ_(a, b) == 0) inv_[static_cast<std::size_t>(a)] = b;
    }
}

int FiniteBrace::additive_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

Perm lambda_map(const FiniteBrace& e, int a) {
  if (a < 0 || a >= e.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(a));
  Perm p(static_cast<std::size_t>(e.order()));
  for (int b = 0; b < e.order(); ++b) p[static_cast<std::size_t>(b)] = e.lambda(a, b);
  return p;
}

BraceSubset classify_subset(const FiniteBrace& e, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int x : subset)
    if (x < 0 || x >= e.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
  BraceSubset s;
  s.elements = subset;
  std::vector<char> in(static_cast<std::size_t>(e.order()), 0);
  for (int x : subset) in[static_cast<std::size_t>(x)] = 1;
  auto mem = [&](int x) { return in[static_cast<std::size_t>(x)] != 0; };

  s.is_subbrace = !subset.empty() && mem(0);
  for (int a : subset)
    for (int b : subset)
      if (!s.is_subbrace || !mem(e.add(a, b)) || !mem(e.circ(a, b))) {
        s.is_subbrace = false;
        break;
      }
  if (!s.is_subbrace) return s;
  s.is_left_ideal = true;
  for (int a = 0; a < e.order() && s.is_left_ideal; ++a)
    for (int y : subset)
      if (!mem(e.lambda(a, y))) {
        s.is_left_ideal = false;
        break;
      }
  if (!s.is_left_ideal) return s;
  s.is_ideal = true;
  for (int a = 0; a < e.order() && s.is_ideal; ++a)
    for (int y : subset)
      if (!mem(e.circ(e.circ(a, y), e.inv(a)))) {
        s.is_ideal = false;
        break;
      }
  if (!s.is_ideal) return s;
  s.is_central = true;
  for (int a = 0; a < e.order() && s.is_central; ++a)
    for (int y : subset) {
      const int sum = e.add(a, y);
      if (e.circ(y, a) != sum || e.circ(a, y) != sum) {
        s.is_central = false;
        break;
      }
    }
  return s;
}

FiniteBrace sub_brace(const FiniteBrace& e, const std::vector<int>& subset) {
  BraceSubset s = classify_subset(e, subset);
  if (!s.is_subbrace) throw Error(ErrorCode::NotABrace, "subset is not a sub-brace");
  const int k = static_cast<int>(s.elements.size());
  std::vector<int> pos(static_cast<std::size_t>(e.order()), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(s.elements[static_cast<std::size_t>(i)])] = i;
  CayleyTable add(k), circ(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int a = s.elements[static_cast<std::size_t>(i)], b = s.elements[static_cast<std::size_t>(j)];
      add.at(i, j) = pos[static_cast<std::size_t>(e.add(a, b))];
      circ.at(i, j) = pos[static_cast<std::size_t>(e.circ(a, b))];
    }
  return FiniteBrace::unchecked(std::move(add), std::move(circ));
}

bool is_brace_morphism(const FiniteBrace& source, const FiniteBrace& target, const Perm& map) {
  if (map.size() != static_cast<std::size_t>(source.order())) return false;
  for (int x : map)
    if (x < 0 || x >= target.order()) return false;
  if (map[0] != 0) return false;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b) {
      const int fa = map[static_cast<std::size_t>(a)], fb = map[static_cast<std::size_t>(b)];
      if (map[static_cast<std::size_t>(source.add(a, b))] != target.add(fa, fb)) return false;
      if (map[static_cast<std::size_t>(source.circ(a, b))] != target.circ(fa, fb)) return false;
    }
  return true;
}

std::vector<int> morphism_kernel(const BraceMorphism& f) {
  std::vector<int> k;
  for (int a = 0; a < f.source.order(); ++a)
    if (f.map[static_cast<std::size_t>(a)] == 0) k.push_back(a);
  return k;
}

QuotientBrace quotient_brace(const FiniteBrace& e, const std::vector<int>& ideal) {
  BraceSubset s = classify_subset(e, ideal);
  if (!s.is_ideal) throw Error(ErrorCode::NotAnIdeal, "subset is not an ideal");
  const int n = e.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (label[static_cast<std::size_t>(a)] >= 0) continue;
    const int l = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int y : s.elements) label[static_cast<std::size_t>(e.add(a, y))] = l;
  }
  const int m = static_cast<int>(reps.size());
  CayleyTable add(m), circ(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int a = reps[static_cast<std::size_t>(i)], b = reps[static_cast<std::size_t>(j)];
      add.at(i, j) = label[static_cast<std::size_t>(e.add(a, b))];
      circ.at(i, j) = label[static_cast<std::size_t>(e.circ(a, b))];
    }
  QuotientBrace q;
  q.brace = FiniteBrace(std::move(add), std::move(circ));
  q.projection = BraceMorphism{e, q.brace, label};
  return q;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

BraceSubset sylow_left_ideal(const FiniteBrace& e, int p) {
  const auto primes = prime_divisors(e.order());
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    throw Error(ErrorCode::PrimeDoesNotDivideOrder,
                std::to_string(p) + " is not a prime divisor of " + std::to_string(e.order()));
  std::vector<int> elems;
  for (int a = 0; a < e.order(); ++a) {
    int k = e.additive_order(a);
    while (k % p == 0) k /= p;
    if (k == 1) elems.push_back(a);
  }
  BraceSubset s = classify_subset(e, elems);
  int ppart = 1, n = e.order();
  while (n % p == 0) {
    n /= p;
    ppart *= p;
  }
  if (!s.is_left_ideal || static_cast<int>(s.elements.size()) != ppart)
    throw std::logic_error("Sylow subset failed the left ideal check");
  return s;
}

}  // namespace brace
