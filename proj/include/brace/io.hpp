#pragma once

// JSON documents for braces, modules, actions, cocycles and extensions.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "brace/extension.hpp"
#include "brace/wells.hpp"

namespace brace::io {

using Json = nlohmann::ordered_json;

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);
/// Arrays of scalars stay on one line; everything else is indented.
std::string dump(const Json& doc);

Json brace_to_json(const FiniteBrace& e);
/// validate = false leaves the tables unchecked so verify can report witnesses.
FiniteBrace brace_from_json(const Json& j, bool validate = true);

Json module_to_json(const Module& m);
Module module_from_json(const Json& j);

/// brace and module are inlined unless file references are given.
Json action_to_json(const ActionPair& a, const std::string& brace_ref = {}, const std::string& module_ref = {});
/// References are resolved relative to base.
ActionPair action_from_json(const Json& j, const std::filesystem::path& base = {});

/// beta and tau as I-coordinate vectors over the nondegenerate (h1, h2), row-major.
Json cocycle_to_json(const Module& i, const Cocycle2& c, const std::string& name = {});
Cocycle2 cocycle_from_json(const Json& j, const Module& i, int h_order);

Json extension_to_json(const Extension& x);
Extension extension_from_json(const Json& j);

Json pair_to_json(const CompatiblePair& p);
CompatiblePair pair_from_json(const Json& j);

FiniteBrace read_brace(const std::filesystem::path& path, bool validate = true);
Module read_module(const std::filesystem::path& path);
ActionPair read_action(const std::filesystem::path& path);
Cocycle2 read_cocycle(const std::filesystem::path& path, const Module& i, int h_order);
Extension read_extension(const std::filesystem::path& path);

}  // namespace brace::io
