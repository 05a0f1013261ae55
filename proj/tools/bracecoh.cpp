// bracecoh: command-line front end over the brace cohomology library.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brace/catalog.hpp"
#include "brace/error.hpp"
#include "brace/general_complex.hpp"
#include "brace/io.hpp"
#include "brace/oracle.hpp"
#include "brace/wells.hpp"

namespace fs = std::filesystem;
using namespace brace;
using io::Json;

namespace {

enum Exit : int {
  kOk = 0,
  kNegative = 1,  // the answer is "no": invalid brace, not good, not equivalent, ...
  kUsage = 2,
  kParse = 3,
  kCrossRef = 4,
  kOracle = 5,
  kAlgebra = 10,
  kBrace = 11,
  kTooLarge = 12,
  kAction = 13,
  kCochain = 14,
  kExtension = 15,
  kWells = 16,
  kInternal = 70,
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAGroup:
    case ErrorCode::NotAbelian:
    case ErrorCode::IdentityNotZero:
    case ErrorCode::DimensionMismatch:
      return kAlgebra;
    case ErrorCode::OrderTooLarge:
      return kTooLarge;
    case ErrorCode::NotABrace:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotAnIdeal:
    case ErrorCode::NotALeftIdeal:
    case ErrorCode::PrimeDoesNotDivideOrder:
    case ErrorCode::NotAnAutomorphism:
      return kBrace;
    case ErrorCode::InvalidActionPair:
    case ErrorCode::NotGoodPair:
    case ErrorCode::IncompatiblePair:
      return kAction;
    case ErrorCode::NotInFixedSubgroup:
    case ErrorCode::NotNormalized:
    case ErrorCode::NotInC2N:
    case ErrorCode::NotACocycle:
      return kCochain;
    case ErrorCode::IdealNotTrivialBrace:
    case ErrorCode::MismatchedEnds:
      return kExtension;
    case ErrorCode::NotAutomorphisms:
    case ErrorCode::NotCompatible:
    case ErrorCode::DoesNotNormalizeIdeal:
    case ErrorCode::NotAdditivelySplit:
    case ErrorCode::SylowNotPreserved:
      return kWells;
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::CrossReferenceError:
      return kCrossRef;
    case ErrorCode::OracleMismatch:
      return kOracle;
  }
  return kInternal;
}

struct Global {
  bool oracle = false;
  std::string out;
  int max_order = 0;
};

std::string perm_str(const Perm& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << p[k];
  os << "]";
  return os.str();
}

std::string coords_str(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

std::string elem_str(const Module& i, int y) { return i.order() == 1 ? "0" : coords_str(i.coordinates(y)); }

std::string cochain_str(const Module& i, const Cochain& c, const char* name) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    auto t = c.tuple(idx);
    if (is_degenerate(t)) continue;
    if (c.h_order <= 2 || c.values[idx] != 0) {
      os << (any ? " " : "") << name << "(";
      for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
      os << ")=" << elem_str(i, c.values[idx]);
      any = true;
    }
  }
  if (!any) os << name << "=0";
  return os.str();
}

std::string cocycle_str(const Module& i, const Cocycle2& c) {
  return cochain_str(i, c.beta, "beta") + "  " + cochain_str(i, c.tau, "tau");
}

std::string group_str(const FgAbelianGroup& g) {
  std::ostringstream os;
  os << g.to_string() << "  (order " << g.order() << ", factors [";
  for (std::size_t k = 0; k < g.rank(); ++k) os << (k ? ", " : "") << g.invariant_factors()[k];
  os << "])";
  return os.str();
}

void oracle_fail(const std::string& what) { throw Error(ErrorCode::OracleMismatch, what); }

void emit(const Global& g, const Json& doc) {
  if (!g.out.empty()) io::write_json(g.out, doc);
}

int cmd_verify(const std::string& path) {
  FiniteBrace e = io::read_brace(path, false);
  Report r = verify_brace(e.add_table(), e.circ_table());
  if (r.ok()) {
    std::cout << "valid left brace of order " << e.order() << (e.is_trivial() ? " (trivial)" : "") << "\n";
    return kOk;
  }
  std::cout << "not a left brace\n" << r.to_string();
  return kNegative;
}

int cmd_autb(const Global& g, const std::string& path) {
  FiniteBrace e = io::read_brace(path);
  auto autos = brace_automorphisms(e);
  std::cout << "|Autb(E)| = " << autos.size() << "\n";
  Json list = Json::array();
  for (const auto& p : autos) {
    std::cout << "  " << perm_str(p) << "\n";
    list.push_back(p);
  }
  if (g.oracle && e.order() <= 8) {
    std::size_t count = 0;
    Perm p = identity_perm(e.order());
    do
      if (is_brace_morphism(e, e, p)) ++count;
    while (std::next_permutation(p.begin(), p.end()));
    if (count != autos.size()) oracle_fail("permutation search finds " + std::to_string(count) + " automorphisms");
    std::cout << "oracle: all " << e.order() << "! permutations agree\n";
  }
  emit(g, Json{{"order", e.order()}, {"automorphisms", list}});
  return kOk;
}

int cmd_goodpair(const std::string& path) {
  ActionPair a = io::read_action(path);
  Report r = verify_action_pair(a);
  if (!r.ok()) {
    std::cout << "not an action pair\n" << r.to_string();
    return kNegative;
  }
  GoodPairResult gp = is_good_pair(a);
  if (gp.good) {
    std::cout << "good pair\n";
    return kOk;
  }
  const auto& w = *gp.witness;
  std::cout << "not a good pair: witness (h1, h2, y) = (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
  return kNegative;
}

ActionPair load_actions(const std::string& path, bool trivial) {
  ActionPair a = io::read_action(path);
  if (trivial) {
    ActionPair t = trivial_actions(a.H, a.I);
    t.comment = "trivial actions";
    return t;
  }
  return a;
}

int cmd_cohomology(const Global& g, const std::string& path, int degree, bool restricted, bool trivial) {
  ActionPair a = load_actions(path, trivial);
  std::cout << "H: order " << a.H.order() << (a.H.name().empty() ? "" : " (" + a.H.name() + ")") << ", I = "
            << a.I.group().to_string() << (trivial ? ", trivial actions" : "") << "\n";
  Json doc;
  doc["degree"] = degree;
  if (degree == 1) {
    FirstCohomology h(a);
    std::cout << "Z1_N order " << h.z1().order() << "\n";
    std::cout << "B1_N order " << h.b1().order() << "\n";
    std::cout << "H1_N ≅ " << group_str(h.structure()) << "\n";
    Json ders = Json::array();
    for (const auto& l : h.derivations()) {
      std::cout << "  " << cochain_str(a.I, l, "lambda") << "\n";
      ders.push_back(l.values);
    }
    doc["z_order"] = static_cast<long long>(h.z1().order());
    doc["derivations"] = ders;
    emit(g, doc);
    return kOk;
  }
  if (degree != 2) throw CLI::ValidationError("--degree", "must be 1 or 2");
  SecondCohomology h(a);
  std::cout << "Z2_N order " << h.z2().order() << "\n";
  std::cout << "B2_N order " << h.b2().order() << "\n";
  std::cout << "H2_N ≅ " << group_str(h.structure()) << "\n";
  Json factors = Json::array();
  for (const auto& d : h.structure().invariant_factors()) factors.push_back(static_cast<long long>(d));
  doc["structure"] = factors;
  doc["z_order"] = static_cast<long long>(h.z2().order());
  doc["b_order"] = static_cast<long long>(h.b2().order());
  std::cout << "representatives:\n";
  Json reps = Json::array();
  const auto rs = h.representatives();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    std::cout << "  " << coords_str(h.structure().coordinates(k)) << "  " << cocycle_str(a.I, rs[k]) << "\n";
    reps.push_back(io::cocycle_to_json(a.I, rs[k]));
  }
  doc["representatives"] = reps;
  if (restricted) {
    RestrictedCohomology r(h);
    std::cout << "RH2_N ≅ " << group_str(r.structure()) << "\n";
    Json taus = Json::array();
    for (const auto& t : r.representatives()) {
      std::cout << "  " << cochain_str(a.I, t, "tau") << "\n";
      taus.push_back(io::cocycle_to_json(a.I, Cocycle2{Cochain(2, a.H.order()), t}));
    }
    doc["restricted"] = taus;
  }
  if (g.oracle) {
    if (oracle::cocycles(a) != h.cocycles()) oracle_fail("Z2_N differs from exhaustive search");
    if (oracle::coboundaries(a) != h.coboundaries()) oracle_fail("B2_N differs from exhaustive search");
    std::cout << "oracle: Z2_N and B2_N agree with exhaustive search\n";
  }
  emit(g, doc);
  return kOk;
}

int cmd_extend(const Global& g, const std::string& action, const std::string& cocycle) {
  ActionPair a = io::read_action(action);
  Cocycle2 c = io::read_cocycle(cocycle, a.I, a.H.order());
  Extension x = build_extension(a, c);
  std::cout << "extension of order " << x.E.order() << ": valid left brace"
            << (is_central_extension(x) ? ", central" : "") << "\n";
  emit(g, io::extension_to_json(x));
  return kOk;
}

int cmd_classify(const Global& g, const std::string& action, bool trivial) {
  ActionPair a = load_actions(action, trivial);
  SecondCohomology h(a);
  auto classes = classify_extensions(h);
  std::cout << classes.size() << " extension classes (H2_N ≅ " << h.structure().to_string() << ")\n";
  if (!g.out.empty()) fs::create_directories(g.out);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    const bool valid = verify_brace(c.extension.E.add_table(), c.extension.E.circ_table()).ok();
    std::cout << "  class " << coords_str(c.class_coords) << "  " << cocycle_str(a.I, c.cocycle) << "  order "
              << c.extension.E.order() << (valid ? " valid" : " INVALID")
              << (is_central_extension(c.extension) ? " central" : "")
              << (splits_additively(c.extension) ? " st-split" : "") << "\n";
    if (!g.out.empty()) io::write_json(fs::path(g.out) / ("class_" + std::to_string(k) + ".json"), io::extension_to_json(c.extension));
  }
  if (g.oracle) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j) {
        const bool fast = are_equivalent(classes[i].extension, classes[j].extension).has_value();
        const bool slow = are_equivalent_bruteforce(classes[i].extension, classes[j].extension).has_value();
        if (fast != slow || fast != (i == j)) oracle_fail("equivalence of classes " + std::to_string(i) + ", " + std::to_string(j));
      }
    std::cout << "oracle: pairwise equivalence agrees with theta enumeration\n";
  }
  return kOk;
}

int cmd_equiv(const Global& g, const std::string& p1, const std::string& p2) {
  Extension x1 = io::read_extension(p1), x2 = io::read_extension(p2);
  auto eq = are_equivalent(x1, x2);
  if (g.oracle && eq.has_value() != are_equivalent_bruteforce(x1, x2).has_value())
    oracle_fail("theta enumeration disagrees with the linear solver");
  if (!eq) {
    std::cout << "not equivalent\n";
    return kNegative;
  }
  std::cout << "equivalent\n  " << cochain_str(x1.I, eq->theta, "theta") << "\n  map " << perm_str(eq->map) << "\n";
  emit(g, Json{{"equivalent", true}, {"theta", eq->theta.values}, {"map", eq->map}});
  return kOk;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

int cmd_wells(const Global& g, const std::string& path) {
  Extension x = io::read_extension(path);
  WellsData w = wells_map(x);
  AutbNormalizing autb = autb_normalizing(x);
  ExactnessReport ex = check_exactness(w, autb);
  const Module& I = x.I;
  std::cout << "H2_N ≅ " << w.h2.structure().to_string() << ", extension class "
            << coords_str(w.h2.class_of(w.extracted.cocycle)) << "\n";
  std::cout << "C_(nu,sigma): " << w.pairs.size() << " pairs\n";
  Json pairs = Json::array();
  for (std::size_t k = 0; k < w.pairs.size(); ++k) {
    const auto& p = w.pairs[k];
    std::cout << "  [" << k << "] phi=" << perm_str(p.phi) << " theta=" << perm_str(p.theta)
              << "  omega=" << coords_str(w.omega[k]) << "\n";
    Json pj = io::pair_to_json(p);
    Json om = Json::array();
    for (const auto& v : w.omega[k]) om.push_back(static_cast<long long>(v));
    pj["omega"] = om;
    pairs.push_back(pj);
  }
  const auto kern = w.kernel();
  std::cout << "Ker omega (inducible):";
  for (int k : kern) std::cout << " " << k;
  std::cout << "\n|Autb_I(E)| = " << autb.autb_i.size() << ", |Autb^{H,I}(E)| = " << autb.kernel.size()
            << ", |Z1_N| = " << FirstCohomology(w.extracted.actions).z1().order() << "\n";
  std::cout << "ker rho = Autb^{H,I}(E): " << yes(ex.kernel_of_rho) << "\n";
  std::cout << "eta: Z1_N -> Autb^{H,I}(E) isomorphism: " << yes(ex.eta) << "\n";
  std::cout << "Im rho = Ker omega: " << yes(ex.image_equals_kernel) << "\n";
  std::cout << "derivation law: " << yes(ex.derivation_law) << "\n";
  std::cout << "omega is a homomorphism on this instance: " << yes(w.omega_is_homomorphism) << "\n";
  if (g.oracle) {
    for (std::size_t k = 0; k < w.pairs.size(); ++k) {
      Inducibility ind = is_inducible(x, w.pairs[k], w.h2, autb);
      if (!ind.routes_agree()) oracle_fail("inducibility routes disagree on pair " + std::to_string(k));
    }
    std::cout << "oracle: direct automorphism search agrees with Ker omega\n";
  }
  (void)I;
  Json doc;
  doc["pairs"] = pairs;
  doc["kernel"] = kern;
  doc["autb_i"] = autb.autb_i.size();
  doc["autb_hi"] = autb.kernel.size();
  doc["exact"] = ex.ok();
  doc["omega_homomorphism"] = w.omega_is_homomorphism;
  emit(g, doc);
  return ex.ok() ? kOk : kNegative;
}

int cmd_inducible(const Global& g, const std::string& path, const std::string& pair_file, int index) {
  Extension x = io::read_extension(path);
  CompatiblePair p;
  if (!pair_file.empty()) {
    p = io::pair_from_json(io::read_json(pair_file));
  } else {
    auto pairs = compatible_pairs(actions_from_extension(x));
    if (index < 0 || static_cast<std::size_t>(index) >= pairs.size())
      throw Error(ErrorCode::IndexOutOfRange, "pair index " + std::to_string(index) + " of " + std::to_string(pairs.size()));
    p = pairs[static_cast<std::size_t>(index)];
  }
  std::cout << "pair phi=" << perm_str(p.phi) << " theta=" << perm_str(p.theta) << "\n";
  Inducibility r = is_inducible(x, p);
  ModuleCriterion m = module_criterion(x, p);
  std::cout << "omega(p) = " << coords_str(r.obstruction) << "\n";
  std::cout << "by omega: " << yes(r.by_omega) << ", by search: " << yes(r.by_search) << ", by module criterion: "
            << yes(r.by_module) << " (bi-module iso " << yes(m.bimodule_iso) << ", classes equal " << yes(m.classes_equal)
            << ")\n";
  if (!r.routes_agree()) oracle_fail("inducibility routes disagree");
  if (r.witness) std::cout << "witness " << perm_str(*r.witness) << "\n";
  Json doc = io::pair_to_json(p);
  doc["inducible"] = r.inducible;
  if (r.witness) doc["witness"] = *r.witness;
  if (splits_additively(x)) {
    SylowVerdict v = sylow_reduction(x, p);
    std::cout << "Sylow reduction:\n";
    for (const auto& pv : v.primes)
      std::cout << "  p=" << pv.prime << " |P|=" << pv.sylow.size() << " restricted pair inducible: " << yes(pv.inducible)
                << ", square commutes: " << yes(pv.square_commutes) << "\n";
    std::cout << "  all primes => global: " << yes(v.implication_holds)
              << "; global => all primes (checked here, not claimed in general): " << yes(v.converse_holds) << "\n";
  } else {
    std::cout << "Sylow reduction: extension is not additively split\n";
  }
  emit(g, doc);
  return r.inducible ? kOk : kNegative;
}

int cmd_enumerate(const Global& g, int order) {
  auto braces = enumerate_braces(order);
  std::cout << braces.size() << " left braces of order " << order << " up to isomorphism\n";
  if (!g.out.empty()) fs::create_directories(g.out);
  for (std::size_t k = 0; k < braces.size(); ++k) {
    const auto& e = braces[k];
    std::cout << "  " << e.name() << (e.is_trivial() ? " trivial" : "") << ", |Autb| = " << brace_automorphisms(e).size() << "\n";
    if (!g.out.empty())
      io::write_json(fs::path(g.out) / ("order" + std::to_string(order) + "_" + std::to_string(k + 1) + ".json"), io::brace_to_json(e));
  }
  return kOk;
}

int cmd_ybe(const Global& g, const std::string& path) {
  FiniteBrace e = io::read_brace(path);
  YbeSolution r = ybe_solution(e);
  YbeCheck c = check_ybe(r);
  const int n = e.order();
  Json table = Json::array();
  for (int x = 0; x < n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < n; ++y) {
      auto [u, v] = r(x, y);
      std::cout << (y ? " " : "") << "(" << u << "," << v << ")";
      row.push_back(Json::array({u, v}));
    }
    std::cout << "\n";
    table.push_back(row);
  }
  std::cout << "braid: " << yes(c.braid) << ", involutive: " << yes(c.involutive) << ", nondegenerate: " << yes(c.nondegenerate)
            << "\n";
  for (const auto& w : c.witnesses) std::cout << "  " << w.to_string() << "\n";
  emit(g, Json{{"order", n}, {"r", table}, {"ok", c.ok()}});
  return c.ok() ? kOk : kNegative;
}

int cmd_catalog_export(const std::string& dir) {
  const fs::path root(dir);
  for (const char* sub : {"braces", "modules", "actions", "cocycles/worked", "cocycles/trivial", "enumerated", "extensions"})
    fs::create_directories(root / sub);
  for (int n = 1; n <= 8; ++n) {
    FiniteBrace e = catalog::trivial_cyclic(n);
    e.set_name("Z/" + std::to_string(n));
    io::write_json(root / "braces" / ("z" + std::to_string(n) + ".json"), io::brace_to_json(e));
  }
  io::write_json(root / "modules/z2.json", io::module_to_json(Module(FgAbelianGroup::of({2}))));
  io::write_json(root / "modules/z3.json", io::module_to_json(Module(FgAbelianGroup::of({3}))));
  io::write_json(root / "modules/klein.json", io::module_to_json(catalog::klein_module()));
  auto action = [&](const char* name, const ActionPair& a, const char* h, const char* m) {
    io::write_json(root / "actions" / name, io::action_to_json(a, std::string("../braces/") + h, std::string("../modules/") + m));
  };
  action("worked.json", catalog::worked_pair(), "z2.json", "klein.json");
  action("worked_trivial.json", catalog::worked_trivial_pair(), "z2.json", "klein.json");
  action("literal.json", catalog::literal_pair(), "z2.json", "klein.json");
  action("z3_inversion.json", catalog::z3_inversion_pair(), "z2.json", "z3.json");
  action("z6_z2_trivial.json", catalog::z6_z2_trivial_pair(), "z6.json", "z2.json");
  const Module k = catalog::klein_module();
  for (const auto& c : catalog::worked_cocycles())
    io::write_json(root / "cocycles/worked" / (c.name + ".json"), io::cocycle_to_json(k, c.cocycle, c.name));
  for (const auto& c : catalog::trivial_action_cocycles())
    io::write_json(root / "cocycles/trivial" / (c.name + ".json"), io::cocycle_to_json(k, c.cocycle, c.name));
  for (int n : {4, 6})
    for (const auto& e : enumerate_braces(n)) {
      std::string file = e.name();
      for (char& ch : file)
        if (ch == ' ' || ch == '.') ch = '_';
      io::write_json(root / "enumerated" / (file + ".json"), io::brace_to_json(e));
    }
  auto extensions = [&](const char* prefix, const ActionPair& a) {
    auto classes = classify_extensions(a);
    for (std::size_t i = 0; i < classes.size(); ++i)
      io::write_json(root / "extensions" / (std::string(prefix) + "_class" + std::to_string(i) + ".json"),
                     io::extension_to_json(classes[i].extension));
  };
  extensions("worked", catalog::worked_pair());
  extensions("worked_trivial", catalog::worked_trivial_pair());
  std::cout << "catalog written to " << dir << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bracecoh: cohomology, extensions and Wells sequences of finite left braces"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--oracle", g.oracle, "rerun linear-algebra answers by brute force and fail on mismatch");
  app.add_option("-o,--output", g.out, "structured output path (a directory for classify/enumerate)");
  app.add_option("--max-order", g.max_order, "search bound for automorphism enumeration (default BRACE_MAX_ORDER or 16)")
      ->check(CLI::PositiveNumber);

  std::string f1, f2, pair_file;
  int degree = 2, order = 0, index = 0;
  bool restricted = false, trivial = false;

  auto* verify = app.add_subcommand("verify", "check the brace axioms of a brace file");
  verify->add_option("brace", f1)->required();
  auto* autb = app.add_subcommand("autb", "list the brace automorphisms");
  autb->add_option("brace", f1)->required();
  auto* goodpair = app.add_subcommand("goodpair", "test whether an action pair is good");
  goodpair->add_option("action", f1)->required();
  auto* coh = app.add_subcommand("cohomology", "compute H1_N or H2_N");
  coh->add_option("action", f1)->required();
  coh->add_option("--degree", degree)->check(CLI::IsMember({1, 2}));
  coh->add_flag("--restricted", restricted, "also compute RH2_N");
  coh->add_flag("--trivial-actions", trivial, "replace the actions by trivial ones");
  auto* extend = app.add_subcommand("extend", "build the extension of a cocycle");
  extend->add_option("action", f1)->required();
  extend->add_option("cocycle", f2)->required();
  auto* classify = app.add_subcommand("classify", "one extension per class of H2_N");
  classify->add_option("action", f1)->required();
  classify->add_flag("--trivial-actions", trivial);
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two extensions");
  equiv->add_option("first", f1)->required();
  equiv->add_option("second", f2)->required();
  auto* wells = app.add_subcommand("wells", "Wells map and exactness report for an extension");
  wells->add_option("extension", f1)->required();
  auto* ind = app.add_subcommand("inducible", "inducibility of a compatible pair");
  ind->add_option("extension", f1)->required();
  auto* pair_opt = ind->add_option("--pair", pair_file, "pair file with phi and theta");
  ind->add_option("--index", index, "index into the sorted compatible pairs")->excludes(pair_opt);
  auto* enumerate = app.add_subcommand("enumerate", "left braces of a given order");
  enumerate->add_option("order", order)->required()->check(CLI::PositiveNumber);
  auto* ybe = app.add_subcommand("ybe", "the set-theoretic solution of a brace");
  ybe->add_option("brace", f1)->required();
  auto* cat = app.add_subcommand("catalog", "catalog utilities");
  auto* cat_export = cat->add_subcommand("export", "write the built-in instances");
  cat_export->add_option("dir", f1)->required();
  cat->require_subcommand(1);
  cat->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (g.max_order > 0) setenv("BRACE_MAX_ORDER", std::to_string(g.max_order).c_str(), 1);

  try {
    if (*verify) return cmd_verify(f1);
    if (*autb) return cmd_autb(g, f1);
    if (*goodpair) return cmd_goodpair(f1);
    if (*coh) return cmd_cohomology(g, f1, degree, restricted, trivial);
    if (*extend) return cmd_extend(g, f1, f2);
    if (*classify) return cmd_classify(g, f1, trivial);
    if (*equiv) return cmd_equiv(g, f1, f2);
    if (*wells) return cmd_wells(g, f1);
    if (*ind) return cmd_inducible(g, f1, pair_file, index);
    if (*enumerate) return cmd_enumerate(g, order);
    if (*ybe) return cmd_ybe(g, f1);
    if (*cat_export) return cmd_catalog_export(f1);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
