#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "octomax/fdtd.hpp"

namespace octomax {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, int line_number)
      : std::runtime_error(what), line(line_number) {}
  int line = 0;
};

// Sectioned key/value text:
//   # comment
//   [section]          (dots allowed for nesting: [scenario.params])
//   key = value        (value: scalar, word, or whitespace-separated list)
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_string(const std::string& text);

  bool has_section(const std::string& section) const;
  bool has(const std::string& section, const std::string& key) const;
  std::vector<std::string> keys(const std::string& section) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int(const std::string& section, const std::string& key, long long fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
  std::vector<long long> get_ints(const std::string& section, const std::string& key) const;

 private:
  struct Entry {
    std::string raw;
    int line = 0;
  };
  std::map<std::string, std::map<std::string, Entry>> sections_;
  const Entry& entry(const std::string& section, const std::string& key) const;
};

// Sections: [lattice] n, h; [time] dt, steps, cfl_limit, allow_cfl_violation,
// diagnostics_every, duality_theta; [scenario] name + numeric parameters;
// [output] snapshot_every, seed. Unknown keys in known sections are rejected.
SolverConfig solver_config_from(const ConfigFile& cfg);

}  // namespace octomax
