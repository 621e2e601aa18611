#include "rotent/config.hpp"

#include "rotent/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace rotent {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text, int line) {
  text = trim(text);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ConfigError(std::string(key), line, "expected a number, got '" + std::string(text) + "'");
  return v;
}

enum class Section { physical, sweep };

}  // namespace

Config parse_config(std::string_view text) {
  Config cfg;
  std::map<std::string, int, std::less<>> seen_physical;
  std::map<std::string, int, std::less<>> seen_sweep;
  std::map<std::string, std::string, std::less<>> sweep_raw;
  Section section = Section::physical;
  int sweep_line = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("", line_no, "unterminated section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (name == "physical") {
        section = Section::physical;
      } else if (name == "sweep") {
        if (sweep_line != 0) throw ConfigError("sweep", line_no, "duplicate [sweep] section");
        section = Section::sweep;
        sweep_line = line_no;
      } else {
        throw ConfigError(std::string(name), line_no, "unknown section");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("", line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("", line_no, "missing key before '='");
    if (value.empty()) throw ConfigError(key, line_no, "missing value");

    if (section == Section::physical) {
      const auto& names = parameter_names();
      if (std::find(names.begin(), names.end(), key) == names.end())
        throw ConfigError(key, line_no, "unknown key");
      if (!seen_physical.emplace(key, line_no).second)
        throw ConfigError(key, line_no, "duplicate key");
      set_parameter(cfg.params, key, parse_number(key, value, line_no));
    } else {
      static const std::vector<std::string> sweep_keys{"axis", "min", "max", "points", "scale",
                                                       "values"};
      if (std::find(sweep_keys.begin(), sweep_keys.end(), key) == sweep_keys.end())
        throw ConfigError(key, line_no, "unknown key in [sweep]");
      if (!seen_sweep.emplace(key, line_no).second)
        throw ConfigError(key, line_no, "duplicate key");
      sweep_raw[key] = std::string(value);
    }
  }

  try {
    validate_parameters(cfg.params);
  } catch (const ParameterError& e) {
    const auto it = seen_physical.find(e.field());
    throw ConfigError(e.field(), it == seen_physical.end() ? 0 : it->second, e.what());
  }

  if (sweep_line == 0) return cfg;

  SweepSpec spec;
  spec.base = cfg.params;
  auto line_of = [&](std::string_view key) {
    const auto it = seen_sweep.find(key);
    return it == seen_sweep.end() ? sweep_line : it->second;
  };

  if (!sweep_raw.contains("axis")) throw ConfigError("axis", sweep_line, "[sweep] needs an axis");
  try {
    spec.axis = parse_axis(sweep_raw["axis"]);
  } catch (const Error& e) {
    throw ConfigError("axis", line_of("axis"), e.what());
  }
  if (const auto it = sweep_raw.find("scale"); it != sweep_raw.end()) {
    if (it->second == "linear") spec.scale = AxisScale::linear;
    else if (it->second == "log") spec.scale = AxisScale::log;
    else throw ConfigError("scale", line_of("scale"), "expected 'linear' or 'log'");
  }
  if (const auto it = sweep_raw.find("values"); it != sweep_raw.end()) {
    std::string_view rest = it->second;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      spec.values.push_back(parse_number("values", rest.substr(0, comma), line_of("values")));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else {
    for (const char* k : {"min", "max", "points"})
      if (!sweep_raw.contains(k)) throw ConfigError(k, sweep_line, "[sweep] needs min, max and points (or values)");
    spec.min = parse_number("min", sweep_raw["min"], line_of("min"));
    spec.max = parse_number("max", sweep_raw["max"], line_of("max"));
    const double pts = parse_number("points", sweep_raw["points"], line_of("points"));
    if (pts < 1 || pts != static_cast<int>(pts))
      throw ConfigError("points", line_of("points"), "must be a positive integer");
    spec.points = static_cast<int>(pts);
  }

  try {
    validate_sweep(spec);
  } catch (const ParameterError& e) {
    throw ConfigError(std::string(axis_name(spec.axis)), sweep_line,
                      std::string("sweep leaves the valid domain: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError("sweep", sweep_line, e.what());
  }
  cfg.sweep = std::move(spec);
  return cfg;
}

std::string serialize_config(const Config& c) {
  std::string out;
  for (const auto& name : parameter_names())
    out += fmt::format("{} = {:.17g}\n", name, get_parameter(c.params, name));
  if (c.sweep) {
    const auto& s = *c.sweep;
    out += "\n[sweep]\n";
    out += fmt::format("axis = {}\n", axis_name(s.axis));
    out += fmt::format("scale = {}\n", s.scale == AxisScale::log ? "log" : "linear");
    if (!s.values.empty()) {
      out += "values = ";
      for (std::size_t i = 0; i < s.values.size(); ++i)
        out += fmt::format("{}{:.17g}", i ? ", " : "", s.values[i]);
      out += "\n";
    } else {
      out += fmt::format("min = {:.17g}\nmax = {:.17g}\npoints = {}\n", s.min, s.max, s.points);
    }
  }
  return out;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace rotent
