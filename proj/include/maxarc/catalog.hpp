#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxarc/arcs.hpp"
#include "maxarc/geometry.hpp"

namespace maxarc {

/// Raised when a plane or arc needs an external file that is not available.
class MissingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variable naming the directory with external plane and arc
/// files (<label>.plane, <label>.arc).
inline constexpr const char* kDataDirVariable = "MAXARC_DATA_DIR";

std::optional<std::filesystem::path> data_directory();

/// "PG(2,q)" for q = 2^m is built internally; "<label>^perp" is the dual of
/// <label>; anything else is read from <dir>/<label>.plane.
PlanePtr load_plane(const std::string& label,
                    const std::optional<std::filesystem::path>& dir = data_directory());

/// Resolves an arc by name: "denniston-<m>-<s>", the two degree-4 arcs of
/// PG(2,16) ("PG(2,16).1", "PG(2,16).2"), the published point sets (whose
/// planes come from the data directory), or <dir>/<label>.arc. A "^perp"
/// suffix yields the dual arc.
Arc load_arc(const std::string& name,
             const std::optional<std::filesystem::path>& dir = data_directory());

/// Arc names that resolve without external files.
std::vector<std::string> internal_arc_names();

}  // namespace maxarc
