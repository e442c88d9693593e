#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fimod/module.hpp"

namespace fimod {

/// Module file contents. `header` is free-form metadata (for example the
/// profile and seed of a random module); it round-trips but carries no math.
struct ModuleFile {
  TruncatedFIModule module;
  nlohmann::json header = nlohmann::json::object();
};

/// Sorted keys, two-space indent, arrays of scalars kept on one line.
std::string pretty_json(const nlohmann::json& j);

nlohmann::json module_to_json(const TruncatedFIModule& v, const nlohmann::json& header = nlohmann::json::object());

/// Canonical text of module_to_json via pretty_json.
std::string dump_module(const TruncatedFIModule& v, const nlohmann::json& header = nlohmann::json::object());

/// Throws FimodError naming the offending field on malformed input, and a
/// validation error naming the first failed relation if the data is not an
/// FI-module.
ModuleFile parse_module(std::string_view text);

ModuleFile load_module(const std::filesystem::path& path);
void save_module(const std::filesystem::path& path, const TruncatedFIModule& v,
                 const nlohmann::json& header = nlohmann::json::object());

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fimod
