#include "brace/io.hpp"

#include <fstream>
#include <sstream>

#include "brace/error.hpp"

namespace brace::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

int to_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) parse_error(std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(to_int(x, what));
  return out;
}

CayleyTable table_from(const Json& v, int n, const char* what) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(n))
    parse_error(std::string(what) + " must have " + std::to_string(n) + " rows");
  CayleyTable t(n);
  for (int a = 0; a < n; ++a) {
    auto row = int_list(v[static_cast<std::size_t>(a)], what);
    if (row.size() != static_cast<std::size_t>(n)) parse_error(std::string(what) + " row " + std::to_string(a) + " has the wrong length");
    for (int b = 0; b < n; ++b) t.at(a, b) = row[static_cast<std::size_t>(b)];
  }
  return t;
}

Json table_to(const CayleyTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

std::vector<Perm> perm_list(const Json& v, int count, int size, const char* what) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(count))
    throw Error(ErrorCode::CrossReferenceError, std::string(what) + " needs one permutation per element of H (" + std::to_string(count) + ")");
  std::vector<Perm> out;
  for (const auto& p : v) {
    auto perm = int_list(p, what);
    if (perm.size() != static_cast<std::size_t>(size))
      throw Error(ErrorCode::CrossReferenceError, std::string(what) + " entries must have |I| = " + std::to_string(size) + " values");
    for (int x : perm)
      if (x < 0 || x >= size) throw Error(ErrorCode::CrossReferenceError, std::string(what) + " value out of range");
    out.push_back(std::move(perm));
  }
  return out;
}

void dump_into(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  auto flat = [](const Json& a) {
    if (!a.is_array()) return false;
    for (const auto& x : a)
      if (x.is_structured()) {
        if (!x.is_array()) return false;
        for (const auto& y : x)
          if (y.is_structured()) return false;
      }
    return true;
  };
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      dump_into(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << inner;
      dump_into(os, j[k], indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else if (j.is_array() && !j.empty() && j[0].is_array()) {
    // matrix: one row per line
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) os << inner << j[k].dump() << (k + 1 < j.size() ? ",\n" : "\n");
    os << pad << "]";
  } else {
    os << j.dump();
  }
}

FiniteBrace inline_or_file_brace(const Json& v, const std::filesystem::path& base) {
  if (v.is_string()) return read_brace(base / v.get<std::string>());
  return brace_from_json(v);
}

Module inline_or_file_module(const Json& v, const std::filesystem::path& base) {
  if (v.is_string()) return read_module(base / v.get<std::string>());
  return module_from_json(v);
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << dump(doc) << "\n";
}

std::string dump(const Json& doc) {
  std::ostringstream os;
  dump_into(os, doc, 0);
  return os.str();
}

Json brace_to_json(const FiniteBrace& e) {
  Json j;
  j["order"] = e.order();
  if (!e.name().empty()) j["name"] = e.name();
  j["add"] = table_to(e.add_table());
  j["circ"] = table_to(e.circ_table());
  return j;
}

FiniteBrace brace_from_json(const Json& j, bool validate) {
  const int n = to_int(field(j, "order"), "order");
  if (n < 1) parse_error("order must be positive");
  CayleyTable add = table_from(field(j, "add"), n, "add");
  CayleyTable circ = table_from(field(j, "circ"), n, "circ");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string();
  if (!validate) return FiniteBrace::unchecked(std::move(add), std::move(circ), std::move(name));
  return FiniteBrace(std::move(add), std::move(circ), std::move(name));
}

Json module_to_json(const Module& m) {
  Json j;
  Json f = Json::array();
  for (const auto& d : m.group().invariant_factors()) f.push_back(static_cast<long long>(d));
  j["factors"] = f;
  return j;
}

Module module_from_json(const Json& j) {
  if (j.contains("factors")) {
    IntVector f;
    for (int d : int_list(j["factors"], "factors")) {
      if (d < 1) parse_error("factors must be positive");
      if (d > 1) f.push_back(d);
    }
    for (std::size_t k = 1; k < f.size(); ++k)
      if (f[k] % f[k - 1] != 0) parse_error("factors must be invariant factors d1 | d2 | ...");
    return Module(FgAbelianGroup(f));
  }
  if (j.contains("add")) {
    const Json& t = j["add"];
    if (!t.is_array()) parse_error("add must be a table");
    CayleyTable add = table_from(t, static_cast<int>(t.size()), "add");
    AbelianDecomposition d = decompose_abelian(add);
    for (std::size_t a = 0; a < d.to_canonical.size(); ++a)
      if (d.to_canonical[a] != a)
        parse_error("module table must already use the canonical carrier order; use factors " + d.group.to_string());
    return Module(d.group);
  }
  parse_error("module needs 'factors' or 'add'");
}

Json action_to_json(const ActionPair& a, const std::string& brace_ref, const std::string& module_ref) {
  Json j;
  if (!a.comment.empty()) j["comment"] = a.comment;
  j["brace"] = brace_ref.empty() ? brace_to_json(a.H) : Json(brace_ref);
  j["module"] = module_ref.empty() ? module_to_json(a.I) : Json(module_ref);
  Json nu = Json::array(), sigma = Json::array();
  for (const auto& p : a.nu) nu.push_back(p);
  for (const auto& p : a.sigma) sigma.push_back(p);
  j["nu"] = nu;
  j["sigma"] = sigma;
  return j;
}

ActionPair action_from_json(const Json& j, const std::filesystem::path& base) {
  ActionPair a;
  a.H = inline_or_file_brace(field(j, "brace"), base);
  a.I = inline_or_file_module(field(j, "module"), base);
  a.nu = perm_list(field(j, "nu"), a.H.order(), a.I.order(), "nu");
  a.sigma = perm_list(field(j, "sigma"), a.H.order(), a.I.order(), "sigma");
  if (j.contains("comment") && j["comment"].is_string()) a.comment = j["comment"].get<std::string>();
  return a;
}

Json cocycle_to_json(const Module& i, const Cocycle2& c, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  const int n = c.beta.h_order;
  for (const auto* part : {&c.beta, &c.tau}) {
    Json list = Json::array();
    for (int h1 = 1; h1 < n; ++h1)
      for (int h2 = 1; h2 < n; ++h2) {
        Json v = Json::array();
        for (const auto& x : i.coordinates((*part)(h1, h2))) v.push_back(static_cast<long long>(x));
        list.push_back(v);
      }
    j[part == &c.beta ? "beta" : "tau"] = list;
  }
  return j;
}

Cocycle2 cocycle_from_json(const Json& j, const Module& i, int h_order) {
  Cocycle2 c = Cocycle2::zero(h_order);
  const std::size_t expected = static_cast<std::size_t>(h_order - 1) * static_cast<std::size_t>(h_order - 1);
  const auto& factors = i.group().invariant_factors();
  for (const char* key : {"beta", "tau"}) {
    const Json& list = field(j, key);
    if (!list.is_array() || list.size() != expected)
      throw Error(ErrorCode::CrossReferenceError, std::string(key) + " needs " + std::to_string(expected) + " entries");
    Cochain& target = key[0] == 'b' ? c.beta : c.tau;
    std::size_t k = 0;
    for (int h1 = 1; h1 < h_order; ++h1)
      for (int h2 = 1; h2 < h_order; ++h2, ++k) {
        auto v = int_list(list[k], key);
        if (v.size() != factors.size())
          throw Error(ErrorCode::CrossReferenceError, std::string(key) + " entries need " + std::to_string(factors.size()) + " coordinates");
        IntVector coords;
        for (std::size_t r = 0; r < v.size(); ++r) coords.push_back(reduce_mod(v[r], factors[r]));
        target.set(h1, h2) = i.element(coords);
      }
  }
  return c;
}

Json extension_to_json(const Extension& x) {
  Json j = brace_to_json(x.E);
  j["module"] = module_to_json(x.I);
  j["ideal"] = x.iota;
  j["proj"] = x.proj;
  j["section"] = x.section;
  return j;
}

Extension extension_from_json(const Json& j) {
  FiniteBrace e = brace_from_json(j);
  std::vector<int> ideal = int_list(field(j, "ideal"), "ideal");
  std::vector<int> proj = int_list(field(j, "proj"), "proj");
  std::optional<Perm> section;
  if (j.contains("section")) section = int_list(j["section"], "section");
  Module m;
  if (j.contains("module")) {
    m = module_from_json(j["module"]);
  } else {
    // ideal given as a set: read I off the additive table and reorder to its carrier
    std::sort(ideal.begin(), ideal.end());
    ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
    for (int v : ideal)
      if (v < 0 || v >= e.order()) throw Error(ErrorCode::IndexOutOfRange, "ideal entry " + std::to_string(v));
    std::vector<int> pos(static_cast<std::size_t>(e.order()), -1);
    for (std::size_t k = 0; k < ideal.size(); ++k) pos[static_cast<std::size_t>(ideal[k])] = static_cast<int>(k);
    CayleyTable t(static_cast<int>(ideal.size()));
    for (std::size_t a = 0; a < ideal.size(); ++a)
      for (std::size_t b = 0; b < ideal.size(); ++b) {
        const int s = pos[static_cast<std::size_t>(e.add(ideal[a], ideal[b]))];
        if (s < 0) throw Error(ErrorCode::NotAnIdeal, "ideal is not closed under +");
        t.at(static_cast<int>(a), static_cast<int>(b)) = s;
      }
    AbelianDecomposition d = decompose_abelian(t);
    m = Module(d.group);
    std::vector<int> ordered(ideal.size());
    for (std::size_t k = 0; k < ideal.size(); ++k) ordered[d.to_canonical[k]] = ideal[k];
    ideal = ordered;
  }
  return make_extension(std::move(e), std::move(m), std::move(ideal), std::move(proj), std::move(section));
}

Json pair_to_json(const CompatiblePair& p) {
  Json j;
  j["phi"] = p.phi;
  j["theta"] = p.theta;
  return j;
}

CompatiblePair pair_from_json(const Json& j) {
  return {int_list(field(j, "phi"), "phi"), int_list(field(j, "theta"), "theta")};
}

FiniteBrace read_brace(const std::filesystem::path& path, bool validate) { return brace_from_json(read_json(path), validate); }

Module read_module(const std::filesystem::path& path) { return module_from_json(read_json(path)); }

ActionPair read_action(const std::filesystem::path& path) {
  return action_from_json(read_json(path), path.parent_path());
}

Cocycle2 read_cocycle(const std::filesystem::path& path, const Module& i, int h_order) {
  return cocycle_from_json(read_json(path), i, h_order);
}

Extension read_extension(const std::filesystem::path& path) { return extension_from_json(read_json(path)); }

}  // namespace brace::io
