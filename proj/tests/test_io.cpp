#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "brace/catalog.hpp"
#include "brace/error.hpp"
#include "brace/io.hpp"

using namespace brace;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / "bracecoh_io_test";
  fs::create_directories(p);
  return p / name;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::OracleMismatch;
}

}  // namespace

TEST_CASE("documents round-trip") {
  FiniteBrace e = enumerate_braces(4).back();
  CHECK(io::brace_from_json(io::brace_to_json(e)) == e);
  Module m = catalog::klein_module();
  CHECK(io::module_from_json(io::module_to_json(m)) == m);
  ActionPair a = catalog::worked_pair();
  ActionPair back = io::action_from_json(io::action_to_json(a));
  CHECK(back == a);
  CHECK(back.comment == a.comment);
  for (const auto& c : catalog::trivial_action_cocycles())
    CHECK(io::cocycle_from_json(io::cocycle_to_json(m, c.cocycle), m, 2) == c.cocycle);
  Extension x = build_extension(a, catalog::worked_cocycles()[3].cocycle);
  Extension y = io::extension_from_json(io::extension_to_json(x));
  CHECK(y.E == x.E);
  CHECK(y.iota == x.iota);
  CHECK(y.proj == x.proj);
  CHECK(y.section == x.section);
  CompatiblePair p{identity_perm(2), Perm{0, 2, 1, 3}};
  CHECK(io::pair_from_json(io::pair_to_json(p)) == p);
}

TEST_CASE("extension files without a module read I off the ideal") {
  Extension x = build_extension(catalog::worked_pair(), catalog::worked_cocycles()[3].cocycle);
  io::Json j = io::extension_to_json(x);
  j.erase("module");
  j.erase("section");
  j["ideal"] = std::vector<int>{3, 2, 1, 0};
  Extension y = io::extension_from_json(j);
  CHECK(y.I == x.I);
  CHECK(std::set<int>(y.iota.begin(), y.iota.end()) == std::set<int>(x.iota.begin(), x.iota.end()));
  CHECK(extract_cocycle(y).actions.H == x.H);
}

TEST_CASE("files and references") {
  fs::path dir = scratch("refs");
  fs::create_directories(dir);
  io::write_json(dir / "h.json", io::brace_to_json(FiniteBrace::trivial_cyclic(2)));
  io::write_json(dir / "i.json", io::module_to_json(catalog::klein_module()));
  io::write_json(dir / "a.json", io::action_to_json(catalog::worked_pair(), "h.json", "i.json"));
  CHECK(io::read_action(dir / "a.json") == catalog::worked_pair());
  std::ofstream(dir / "broken.json") << "{ \"order\": 2, ";
  CHECK(code_of([&] { io::read_brace(dir / "broken.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { io::read_brace(dir / "missing.json"); }) == ErrorCode::ParseError);
  io::Json short_nu = io::action_to_json(catalog::worked_pair());
  short_nu["nu"] = io::Json::array({std::vector<int>{0, 1, 2, 3}});
  CHECK(code_of([&] { io::action_from_json(short_nu); }) == ErrorCode::CrossReferenceError);
  io::Json no_add = io::brace_to_json(FiniteBrace::trivial_cyclic(2));
  no_add.erase("add");
  CHECK(code_of([&] { io::brace_from_json(no_add); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { io::module_from_json(io::Json{{"factors", {4, 2}}}); }) == ErrorCode::ParseError);
}

TEST_CASE("dump is deterministic and keeps rows on one line") {
  io::Json j = io::brace_to_json(FiniteBrace::trivial_cyclic(3));
  const std::string s = io::dump(j);
  CHECK(s == io::dump(io::Json::parse(s)));
  CHECK(s.find("[0,1,2]") != std::string::npos);
}
