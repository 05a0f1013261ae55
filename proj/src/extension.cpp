#include "brace/extension.hpp"

#include <algorithm>

#include "brace/error.hpp"

namespace brace {

namespace {

std::vector<int> image_of(const Perm& iota) {
  std::vector<int> s(iota.begin(), iota.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> invert_partial(const Perm& iota, int n) {
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (std::size_t y = 0; y < iota.size(); ++y) inv[static_cast<std::size_t>(iota[y])] = static_cast<int>(y);
  return inv;
}

void check_ideal(const Extension& x) {
  const auto img = image_of(x.iota);
  BraceSubset s = classify_subset(x.E, img);
  if (!s.is_ideal) throw Error(ErrorCode::NotAnIdeal, "image of I is not an ideal of E");
  for (int a : img)
    for (int b : img)
      if (x.E.circ(a, b) != x.E.add(a, b)) throw Error(ErrorCode::IdealNotTrivialBrace, "image of I is not a trivial brace");
}

// (h, y) coordinates of E relative to the section
struct Coordinates {
  std::vector<int> h, y;
};

Coordinates coordinates(const Extension& x, const Perm& section) {
  const auto inv = invert_partial(x.iota, x.E.order());
  Coordinates c;
  for (int e = 0; e < x.E.order(); ++e) {
    const int h = x.proj[static_cast<std::size_t>(e)];
    c.h.push_back(h);
    c.y.push_back(inv[static_cast<std::size_t>(x.E.sub(e, section[static_cast<std::size_t>(h)]))]);
  }
  return c;
}

Perm equivalence_map(const Extension& x1, const Extension& x2, const Cochain& theta) {
  Coordinates c = coordinates(x1, x1.section);
  Perm map(static_cast<std::size_t>(x1.E.order()));
  for (int e = 0; e < x1.E.order(); ++e) {
    const int h = c.h[static_cast<std::size_t>(e)];
    const int y = x1.I.add(c.y[static_cast<std::size_t>(e)], theta(h));
    map[static_cast<std::size_t>(e)] = x2.E.add(x2.section[static_cast<std::size_t>(h)], x2.iota[static_cast<std::size_t>(y)]);
  }
  return map;
}

void check_same_ends(const Extension& x1, const Extension& x2) {
  if (!(x1.H == x2.H) || !(x1.I == x2.I))
    throw Error(ErrorCode::MismatchedEnds, "extensions of different H or I");
}

}  // namespace

Extension make_extension(FiniteBrace e, Module i, Perm iota, Perm proj, std::optional<Perm> section) {
  const int n = e.order();
  if (iota.size() != static_cast<std::size_t>(i.order()) || proj.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::MismatchedEnds, "ideal/proj lengths do not match the carriers");
  for (int v : iota)
    if (v < 0 || v >= n) throw Error(ErrorCode::IndexOutOfRange, "ideal entry " + std::to_string(v));
  if (!is_brace_morphism(i.as_brace(), e, iota) && [&] {
        for (int a = 0; a < i.order(); ++a)
          for (int b = 0; b < i.order(); ++b)
            if (iota[static_cast<std::size_t>(i.add(a, b))] != e.add(iota[static_cast<std::size_t>(a)], iota[static_cast<std::size_t>(b)]))
              return true;
        return false;
      }())
    throw Error(ErrorCode::MismatchedEnds, "ideal map is not additive");
  if (image_of(iota) != [&] {
        auto s = image_of(iota);
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
      }())
    throw Error(ErrorCode::MismatchedEnds, "ideal map is not injective");
  int m = 0;
  for (int v : proj) {
    if (v < 0) throw Error(ErrorCode::IndexOutOfRange, "proj entry " + std::to_string(v));
    m = std::max(m, v + 1);
  }
  if (m * i.order() != n) throw Error(ErrorCode::MismatchedEnds, "|E| != |H| |I|");
  std::vector<int> pre(static_cast<std::size_t>(m), -1);
  for (int a = n - 1; a >= 0; --a) pre[static_cast<std::size_t>(proj[static_cast<std::size_t>(a)])] = a;
  if (std::find(pre.begin(), pre.end(), -1) != pre.end()) throw Error(ErrorCode::MismatchedEnds, "proj is not surjective");
  CayleyTable add(m), circ(m);
  for (int h1 = 0; h1 < m; ++h1)
    for (int h2 = 0; h2 < m; ++h2) {
      const int a = pre[static_cast<std::size_t>(h1)], b = pre[static_cast<std::size_t>(h2)];
      add.at(h1, h2) = proj[static_cast<std::size_t>(e.add(a, b))];
      circ.at(h1, h2) = proj[static_cast<std::size_t>(e.circ(a, b))];
    }
  Report r = verify_brace(add, circ);
  if (!r.ok()) throw Error(ErrorCode::MismatchedEnds, "proj does not induce a brace: " + r.failures.front().to_string());
  FiniteBrace h(add, circ);
  if (!is_brace_morphism(e, h, proj)) throw Error(ErrorCode::MismatchedEnds, "proj is not a brace morphism");
  std::vector<int> ker;
  for (int a = 0; a < n; ++a)
    if (proj[static_cast<std::size_t>(a)] == 0) ker.push_back(a);
  if (ker != image_of(iota)) throw Error(ErrorCode::MismatchedEnds, "image of I differs from the kernel of proj");

  Extension x{std::move(e), std::move(h), std::move(i), std::move(iota), std::move(proj), {}};
  check_ideal(x);
  if (section) {
    if (section->size() != static_cast<std::size_t>(m) || (*section)[0] != 0)
      throw Error(ErrorCode::MismatchedEnds, "section must have |H| entries and s(0) = 0");
    for (int h1 = 0; h1 < m; ++h1) {
      const int v = (*section)[static_cast<std::size_t>(h1)];
      if (v < 0 || v >= n || x.proj[static_cast<std::size_t>(v)] != h1)
        throw Error(ErrorCode::MismatchedEnds, "section is not a right inverse of proj");
    }
    x.section = *section;
  } else {
    x.section = pre;
  }
  return x;
}

Extension build_extension(const ActionPair& a, const Cocycle2& c) {
  require_good_pair(a);
  const int n = a.H.order(), m = a.I.order();
  if (!in_c2n(c)) throw Error(ErrorCode::NotACocycle, "pair is not in C^2_N (normalized, beta symmetric)");
  std::vector<Perm> nu_inv;
  for (const auto& p : a.nu) nu_inv.push_back(inverse(p));
  CayleyTable add(n * m), circ(n * m);
  const Module& I = a.I;
  for (int h1 = 0; h1 < n; ++h1)
    for (int y1 = 0; y1 < m; ++y1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int y2 = 0; y2 < m; ++y2) {
          const int e1 = h1 * m + y1, e2 = h2 * m + y2;
          add.at(e1, e2) = a.H.add(h1, h2) * m + I.add(I.add(y1, y2), c.beta(h1, h2));
          const int hh = a.H.circ(h1, h2);
          const int first = a.nu_of(hh, a.sigma_of(h2, nu_inv[static_cast<std::size_t>(h1)][static_cast<std::size_t>(y1)]));
          circ.at(e1, e2) = hh * m + I.add(I.add(first, a.nu_of(h1, y2)), c.tau(h1, h2));
        }
  Cochain3 d = d2(a, c);
  if (!d.is_zero()) {
    std::string where;
    for (const auto* t : {&d.v, &d.m, &d.h}) {
      for (std::size_t idx = 0; idx < t->size() && where.empty(); ++idx)
        if (t->values[idx] != 0) {
          auto tup = t->tuple(idx);
          where = std::string(t == &d.v ? "d_v beta" : t == &d.m ? "d_h beta - d_v tau" : "d_h tau") + " nonzero at (" +
                  std::to_string(tup[0]) + ", " + std::to_string(tup[1]) + ", " + std::to_string(tup[2]) + ")";
        }
      if (!where.empty()) break;
    }
    Report r = verify_brace(add, circ);
    if (!r.ok()) where += "; " + r.failures.front().to_string();
    throw Error(ErrorCode::NotACocycle, where);
  }
  Extension x;
  x.E = FiniteBrace(std::move(add), std::move(circ), "extension");
  x.H = a.H;
  x.I = a.I;
  for (int y = 0; y < m; ++y) x.iota.push_back(y);
  for (int e = 0; e < n * m; ++e) x.proj.push_back(e / m);
  for (int h = 0; h < n; ++h) x.section.push_back(h * m);
  return x;
}

Extracted extract_cocycle(const Extension& x) { return extract_cocycle(x, x.section); }

Extracted extract_cocycle(const Extension& x, const Perm& s) {
  check_ideal(x);
  const int n = x.H.order(), m = x.I.order();
  if (s.size() != static_cast<std::size_t>(n) || s[0] != 0) throw Error(ErrorCode::MismatchedEnds, "bad section");
  const auto inv = invert_partial(x.iota, x.E.order());
  const FiniteBrace& E = x.E;
  auto back = [&](int e) {
    const int y = inv[static_cast<std::size_t>(e)];
    if (y < 0) throw Error(ErrorCode::MismatchedEnds, "section is not a right inverse of proj");
    return y;
  };
  Extracted out;
  out.actions.H = x.H;
  out.actions.I = x.I;
  for (int h = 0; h < n; ++h) {
    const int sh = s[static_cast<std::size_t>(h)];
    Perm nu(static_cast<std::size_t>(m)), sigma(static_cast<std::size_t>(m));
    for (int y = 0; y < m; ++y) {
      const int iy = x.iota[static_cast<std::size_t>(y)];
      nu[static_cast<std::size_t>(y)] = back(E.sub(E.circ(sh, iy), sh));
      sigma[static_cast<std::size_t>(y)] = back(E.circ(E.circ(E.inv(sh), iy), sh));
    }
    out.actions.nu.push_back(std::move(nu));
    out.actions.sigma.push_back(std::move(sigma));
  }
  out.cocycle = Cocycle2::zero(n);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2) {
      const int s1 = s[static_cast<std::size_t>(h1)], s2 = s[static_cast<std::size_t>(h2)];
      out.cocycle.beta.set(h1, h2) = back(E.sub(E.add(s1, s2), s[static_cast<std::size_t>(x.H.add(h1, h2))]));
      out.cocycle.tau.set(h1, h2) = back(E.sub(E.circ(s1, s2), s[static_cast<std::size_t>(x.H.circ(h1, h2))]));
    }
  return out;
}

ActionPair actions_from_extension(const Extension& x) { return extract_cocycle(x).actions; }

std::vector<Perm> all_sections(const Extension& x, std::size_t limit) {
  const int n = x.H.order();
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(n));
  for (int e = 0; e < x.E.order(); ++e) fibers[static_cast<std::size_t>(x.proj[static_cast<std::size_t>(e)])].push_back(e);
  fibers[0] = {0};
  std::size_t total = 1;
  for (const auto& f : fibers) {
    total *= f.size();
    if (total > limit) throw Error(ErrorCode::OrderTooLarge, "too many sections to enumerate");
  }
  std::vector<Perm> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Perm s(static_cast<std::size_t>(n));
    std::size_t rest = idx;
    for (int h = n; h-- > 0;) {
      const auto& f = fibers[static_cast<std::size_t>(h)];
      s[static_cast<std::size_t>(h)] = f[rest % f.size()];
      rest /= f.size();
    }
    out.push_back(std::move(s));
  }
  return out;
}

Perm perturbed_section(const Extension& x, const Cochain& theta) {
  Perm s = x.section;
  for (int h = 0; h < x.H.order(); ++h)
    s[static_cast<std::size_t>(h)] = x.E.add(s[static_cast<std::size_t>(h)], x.iota[static_cast<std::size_t>(theta(h))]);
  return s;
}

bool is_equivalence(const Extension& x1, const Extension& x2, const Perm& map) {
  if (!is_permutation(map) || !is_brace_morphism(x1.E, x2.E, map)) return false;
  for (int y = 0; y < x1.I.order(); ++y)
    if (map[static_cast<std::size_t>(x1.iota[static_cast<std::size_t>(y)])] != x2.iota[static_cast<std::size_t>(y)]) return false;
  for (int e = 0; e < x1.E.order(); ++e)
    if (x2.proj[static_cast<std::size_t>(map[static_cast<std::size_t>(e)])] != x1.proj[static_cast<std::size_t>(e)]) return false;
  return true;
}

std::optional<Equivalence> are_equivalent(const Extension& x1, const Extension& x2) {
  check_same_ends(x1, x2);
  Extracted c1 = extract_cocycle(x1), c2 = extract_cocycle(x2);
  if (!(c1.actions == c2.actions)) return std::nullopt;
  SecondCohomology h(c1.actions);
  auto theta = h.coboundary_witness(cocycle_sub(x1.I, c1.cocycle, c2.cocycle));
  if (!theta) return std::nullopt;
  Equivalence eq{equivalence_map(x1, x2, *theta), *theta};
  if (!is_equivalence(x1, x2, eq.map)) throw std::logic_error("solved theta does not give an equivalence");
  return eq;
}

std::optional<Equivalence> are_equivalent_bruteforce(const Extension& x1, const Extension& x2) {
  check_same_ends(x1, x2);
  const int n = x1.H.order(), m = x1.I.order();
  std::size_t total = 1;
  for (int k = 1; k < n; ++k) total *= static_cast<std::size_t>(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Cochain theta(1, n);
    std::size_t rest = idx;
    for (int h = n - 1; h >= 1; --h) {
      theta.set(h) = static_cast<int>(rest % static_cast<std::size_t>(m));
      rest /= static_cast<std::size_t>(m);
    }
    Perm map = equivalence_map(x1, x2, theta);
    if (is_equivalence(x1, x2, map)) return Equivalence{std::move(map), std::move(theta)};
  }
  return std::nullopt;
}

std::vector<ClassifiedExtension> classify_extensions(const ActionPair& a) {
  return classify_extensions(SecondCohomology(a));
}

std::vector<ClassifiedExtension> classify_extensions(const SecondCohomology& h2) {
  std::vector<ClassifiedExtension> out;
  const auto reps = h2.representatives();
  for (std::size_t k = 0; k < reps.size(); ++k) {
    Extension x = build_extension(h2.actions(), reps[k]);
    x.E.set_name("extension class " + std::to_string(k));
    out.push_back({h2.structure().coordinates(k), reps[k], std::move(x)});
  }
  return out;
}

bool is_central_extension(const Extension& x) { return classify_subset(x.E, x.iota).is_central; }

namespace {

bool section_is_additive(const Extension& x, const Perm& s) {
  for (int a = 0; a < x.H.order(); ++a)
    for (int b = 0; b < x.H.order(); ++b)
      if (s[static_cast<std::size_t>(x.H.add(a, b))] != x.E.add(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

}  // namespace

std::optional<Perm> splits_additively(const Extension& x) {
  Extracted ex = extract_cocycle(x);
  const int n = x.H.order();
  const Module& I = x.I;
  const int r = I.rank();
  CochainLayout theta_layout(n, 1, I), pairs(n, 2, I);
  // g(t) = t(h2) - t(h1 + h2) + t(h1) must equal -beta
  IntMatrix g(pairs.dimension(), theta_layout.dimension());
  for (std::size_t t = 0; t < theta_layout.tuples().size(); ++t)
    for (int k = 0; k < r; ++k) {
      Cochain e = theta_layout.basis(t, k);
      Cochain gv(2, n);
      for (int h1 = 0; h1 < n; ++h1)
        for (int h2 = 0; h2 < n; ++h2) gv.set(h1, h2) = I.add(I.sub(e(h2), e(x.H.add(h1, h2))), e(h1));
      IntVector col = pairs.to_vector(gv);
      for (std::size_t i = 0; i < col.size(); ++i) g(i, t * static_cast<std::size_t>(r) + static_cast<std::size_t>(k)) = col[i];
    }
  Cochain minus_beta(2, n);
  for (std::size_t i = 0; i < minus_beta.size(); ++i) minus_beta.values[i] = I.neg(ex.cocycle.beta.values[i]);
  auto sol = solve_congruences(g, pairs.to_vector(minus_beta), pairs.ambient().moduli());
  if (!sol) return std::nullopt;
  Cochain t = theta_layout.from_vector(theta_layout.ambient().reduce(*sol));
  Perm s = perturbed_section(x, t);
  if (!section_is_additive(x, s)) throw std::logic_error("solved section is not additive");
  return s;
}

std::optional<Perm> splits_additively_bruteforce(const Extension& x) {
  for (const Perm& s : all_sections(x))
    if (section_is_additive(x, s)) return s;
  return std::nullopt;
}

Extension restrict_extension(const Extension& x, const std::vector<int>& p) {
  BraceSubset ps = classify_subset(x.H, p);
  if (!ps.is_left_ideal) throw Error(ErrorCode::NotALeftIdeal, "restriction needs a left ideal of H");
  std::vector<int> pos_h(static_cast<std::size_t>(x.H.order()), -1);
  for (std::size_t k = 0; k < ps.elements.size(); ++k) pos_h[static_cast<std::size_t>(ps.elements[k])] = static_cast<int>(k);
  std::vector<int> r;
  for (int e = 0; e < x.E.order(); ++e)
    if (pos_h[static_cast<std::size_t>(x.proj[static_cast<std::size_t>(e)])] >= 0) r.push_back(e);
  std::vector<int> pos_e(static_cast<std::size_t>(x.E.order()), -1);
  for (std::size_t k = 0; k < r.size(); ++k) pos_e[static_cast<std::size_t>(r[k])] = static_cast<int>(k);
  Extension out;
  out.E = sub_brace(x.E, r);
  out.H = sub_brace(x.H, ps.elements);
  out.I = x.I;
  for (int v : x.iota) out.iota.push_back(pos_e[static_cast<std::size_t>(v)]);
  for (int e : r) out.proj.push_back(pos_h[static_cast<std::size_t>(x.proj[static_cast<std::size_t>(e)])]);
  for (int h : ps.elements) out.section.push_back(pos_e[static_cast<std::size_t>(x.section[static_cast<std::size_t>(h)])]);
  return out;
}

}  // namespace brace
