#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>

namespace surdbits {

enum class OutputFormat { Json, Csv };

/// Run defaults, read from a `key = value` text file. Unset search caps and
/// I_max fall back to the per-operation defaults.
struct RunConfig {
  std::uint64_t guard_bit_cap = std::uint64_t{1} << 21;
  std::optional<std::uint64_t> nr_cap;
  std::optional<std::uint64_t> mn_cap;
  std::optional<std::uint64_t> i_max;
  std::optional<OutputFormat> output_format;
  std::optional<std::string> output_path;
};

inline constexpr const char* kConfigEnvVar = "SURDBITS_CONFIG";

/// Keys: guard_bit_cap, nr_cap, mn_cap, i_max, output_format, output_path.
/// '#' starts a comment. Unknown keys and non-positive caps are rejected.
RunConfig parse_config(std::istream& in);
RunConfig load_config_file(const std::string& path);

}  // namespace surdbits
