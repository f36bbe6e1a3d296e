#include "surdbits/config.hpp"

#include <charconv>
#include <fstream>

#include "surdbits/error.hpp"

namespace surdbits {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_positive(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out == 0) {
    throw Error(ErrorKind::InvalidArgument, "config: " + key + " must be a positive integer, got '" + value + "'");
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "guard_bit_cap") {
      cfg.guard_bit_cap = parse_positive(key, value);
    } else if (key == "nr_cap") {
      cfg.nr_cap = parse_positive(key, value);
    } else if (key == "mn_cap") {
      cfg.mn_cap = parse_positive(key, value);
    } else if (key == "i_max") {
      cfg.i_max = parse_positive(key, value);
    } else if (key == "output_format") {
      if (value == "json") {
        cfg.output_format = OutputFormat::Json;
      } else if (value == "csv") {
        cfg.output_format = OutputFormat::Csv;
      } else {
        throw Error(ErrorKind::InvalidArgument, "config: output_format must be json or csv");
      }
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else {
      throw Error(ErrorKind::InvalidArgument, "config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config file " + path);
  return parse_config(in);
}

}  // namespace surdbits
