#pragma once

#include "rotent/sweeps.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace rotent {

/// Parsed configuration document.
///
///   # comment
///   T = 10             physical keys, SI units, named like ParameterSet fields
///   [physical]         optional header for the same keys
///   [sweep]
///   axis = angular_momentum
///   min = 1
///   max = 200
///   points = 200
///   scale = linear     or log
///   values = 1, 2, 5   explicit grid instead of min/max/points
///
/// Unspecified physical keys take the reference values.
struct Config {
  ParameterSet params;
  std::optional<SweepSpec> sweep;  // present iff a [sweep] section exists
};

/// Throws ConfigError carrying the key and line for malformed lines, unknown
/// keys or sections, duplicates, and out-of-domain values.
Config parse_config(std::string_view text);

/// Writes every field, so parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const Config& c);

/// Reads and parses a file; I/O failures become ConfigError.
Config load_config(const std::string& path);

}  // namespace rotent
