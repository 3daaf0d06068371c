#include "octomax/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace octomax {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + tok + "'", line);
  }
}

long long parse_int(const std::string& tok, int line) {
  long long v = 0;
  const auto* begin = tok.data();
  const auto* end = tok.data() + tok.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw ConfigError("not an integer: '" + tok + "'", line);
  return v;
}

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text) {
  ConfigFile cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError("empty section name", lineno);
      cfg.sections_[section];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", lineno);
    auto& sec = cfg.sections_[section];
    if (sec.count(key)) throw ConfigError("duplicate key '" + key + "'", lineno);
    sec[key] = Entry{value, lineno};
  }
  return cfg;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

bool ConfigFile::has_section(const std::string& section) const {
  return sections_.count(section) != 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) != 0;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
  std::vector<std::string> out;
  auto it = sections_.find(section);
  if (it == sections_.end()) return out;
  for (const auto& [k, v] : it->second) {
    (void)v;
    out.push_back(k);
  }
  return out;
}

const ConfigFile::Entry& ConfigFile::entry(const std::string& section,
                                           const std::string& key) const {
  auto it = sections_.find(section);
  if (it == sections_.end()) throw ConfigError("missing section [" + section + "]", 0);
  auto jt = it->second.find(key);
  if (jt == it->second.end())
    throw ConfigError("missing key '" + key + "' in section [" + section + "]", 0);
  return jt->second;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
  return entry(section, key).raw;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
  const Entry& e = entry(section, key);
  return parse_double(e.raw, e.line);
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long ConfigFile::get_int(const std::string& section, const std::string& key) const {
  const Entry& e = entry(section, key);
  return parse_int(e.raw, e.line);
}

long long ConfigFile::get_int(const std::string& section, const std::string& key,
                              long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
  if (!has(section, key)) return fallback;
  const Entry& e = entry(section, key);
  if (e.raw == "true" || e.raw == "1" || e.raw == "yes" || e.raw == "on") return true;
  if (e.raw == "false" || e.raw == "0" || e.raw == "no" || e.raw == "off") return false;
  throw ConfigError("not a boolean: '" + e.raw + "'", e.line);
}

std::vector<double> ConfigFile::get_doubles(const std::string& section,
                                            const std::string& key) const {
  const Entry& e = entry(section, key);
  std::vector<double> out;
  for (const auto& tok : split_ws(e.raw)) out.push_back(parse_double(tok, e.line));
  return out;
}

std::vector<long long> ConfigFile::get_ints(const std::string& section,
                                            const std::string& key) const {
  const Entry& e = entry(section, key);
  std::vector<long long> out;
  for (const auto& tok : split_ws(e.raw)) out.push_back(parse_int(tok, e.line));
  return out;
}

namespace {

void reject_unknown_keys(const ConfigFile& cfg, const std::string& section,
                         std::initializer_list<const char*> known) {
  for (const auto& key : cfg.keys(section)) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw ConfigError("unknown key '" + key + "' in section [" + section + "]", 0);
  }
}

}  // namespace

SolverConfig solver_config_from(const ConfigFile& cfg) {
  SolverConfig out;
  reject_unknown_keys(cfg, "lattice", {"n", "h"});
  reject_unknown_keys(cfg, "time",
                      {"dt", "steps", "cfl_limit", "allow_cfl_violation", "diagnostics_every",
                       "duality_theta"});
  reject_unknown_keys(cfg, "output", {"snapshot_every", "seed"});

  if (cfg.has("lattice", "n")) {
    const auto n = cfg.get_ints("lattice", "n");
    if (n.size() != 3) throw ConfigError("lattice n needs exactly 3 entries", 0);
    for (int k = 0; k < 3; ++k) out.n[k] = static_cast<int>(n[k]);
  }
  if (cfg.has("lattice", "h")) {
    const auto h = cfg.get_doubles("lattice", "h");
    if (h.size() != 3) throw ConfigError("lattice h needs exactly 3 entries", 0);
    for (int k = 0; k < 3; ++k) out.h[k] = h[k];
  }
  out.dt = cfg.get_double("time", "dt", 0.0);
  out.steps = static_cast<int>(cfg.get_int("time", "steps", 1));
  out.cfl_limit = cfg.get_double("time", "cfl_limit", 0.0);
  out.allow_cfl_violation = cfg.get_bool("time", "allow_cfl_violation", false);
  out.diagnostics_every = static_cast<int>(cfg.get_int("time", "diagnostics_every", 1));
  out.duality_theta = cfg.get_double("time", "duality_theta", out.duality_theta);
  if (cfg.has_section("scenario")) {
    for (const auto& key : cfg.keys("scenario")) {
      if (key == "name")
        out.scenario = cfg.get_string("scenario", "name");
      else
        out.scenario_params[key] = cfg.get_double("scenario", key);
    }
  }
  out.snapshot_every = static_cast<int>(cfg.get_int("output", "snapshot_every", 0));
  out.seed = static_cast<unsigned long>(cfg.get_int("output", "seed", 0));
  return out;
}

}  // namespace octomax
