// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "feabc/error.hpp"
#include "feabc/harness.hpp"

namespace feabc::harness
{

namespace
{

std::string trim(const std::string &s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
  {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string &s, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
  {
    item = trim(item);
    if (!item.empty())
    {
      out.push_back(item);
    }
  }
  return out;
}

double to_double(const std::string &key, const std::string &v)
{
  double x = 0.0;
  const auto *end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x))
  {
    throw ConfigError("config: " + key + " expects a number, got '" + v + "'");
  }
  return x;
}

int to_int(const std::string &key, const std::string &v)
{
  int x = 0;
  const auto *end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end)
  {
    throw ConfigError("config: " + key + " expects an integer, got '" + v + "'");
  }
  return x;
}

bool to_bool(const std::string &key, const std::string &v)
{
  const std::string s = lower(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on")
  {
    return true;
  }
  if (s == "false" || s == "0" || s == "no" || s == "off")
  {
    return false;
  }
  throw ConfigError("config: " + key + " expects true or false, got '" + v + "'");
}

assembly::AbcKind to_abc(const std::string &v)
{
  const std::string s = lower(v);
  if (s == "kfe")
  {
    return assembly::AbcKind::Kfe;
  }
  if (s == "wfe")
  {
    return assembly::AbcKind::Wfe;
  }
  if (s == "bgt1" || s == "bgt-1")
  {
    return assembly::AbcKind::Bgt1;
  }
  if (s == "bgt2" || s == "bgt-2")
  {
    return assembly::AbcKind::Bgt2;
  }
  throw ConfigError("config: abc must be kfe, wfe, bgt1 or bgt2, got '" + v + "'");
}

using Setter = std::function<void(ScatterConfig &, const std::string &, const std::string &)>;

const std::vector<std::pair<std::string, Setter>> &setters()
{
  static const std::vector<std::pair<std::string, Setter>> table = {
    {"name", [](ScatterConfig &c, const std::string &, const std::string &v) { c.name = v; }},
    {"dimension",
     [](ScatterConfig &c, const std::string &, const std::string &v)
     {
       const std::string s = lower(v);
       if (s == "2d" || s == "planar")
       {
         c.dimension = Dimension::Planar;
       }
       else if (s == "axisym" || s == "3d" || s == "3d-axisym" || s == "axisymmetric")
       {
         c.dimension = Dimension::Axisymmetric;
       }
       else
       {
         throw ConfigError("config: dimension must be 2d or axisym, got '" + v + "'");
       }
     }},
    {"scatterer",
     [](ScatterConfig &c, const std::string &, const std::string &v)
     {
       const std::string s = lower(v);
       if (s == "cylinder")
       {
         c.scatterer = reference::Scatterer::Cylinder;
       }
       else if (s == "sphere")
       {
         c.scatterer = reference::Scatterer::Sphere;
       }
       else
       {
         throw ConfigError("config: scatterer must be cylinder or sphere, got '" + v + "'");
       }
     }},
    {"bc",
     [](ScatterConfig &c, const std::string &, const std::string &v)
     {
       const std::string s = lower(v);
       if (s == "soft" || s == "0")
       {
         c.bc = assembly::BoundaryKind::Soft;
       }
       else if (s == "hard" || s == "1")
       {
         c.bc = assembly::BoundaryKind::Hard;
       }
       else
       {
         throw ConfigError("config: bc must be soft (0) or hard (1), got '" + v + "'");
       }
     }},
    {"k", [](ScatterConfig &c, const std::string &k, const std::string &v) { c.k = to_double(k, v); }},
    {"r0", [](ScatterConfig &c, const std::string &k, const std::string &v) { c.r0 = to_double(k, v); }},
    {"R", [](ScatterConfig &c, const std::string &k, const std::string &v) { c.R = to_double(k, v); }},
    {"abc", [](ScatterConfig &c, const std::string &, const std::string &v) { c.abc = to_abc(v); }},
    {"terms", [](ScatterConfig &c, const std::string &k, const std::string &v) { c.terms = to_int(k, v); }},
    {"degree", [](ScatterConfig &c, const std::string &k, const std::string &v) { c.degree = to_int(k, v); }},
    {"n_lambda",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.n_lambda = to_double(k, v); }},
    {"radial_elements",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.radial_elements = to_int(k, v); }},
    {"angular_elements",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.angular_elements = to_int(k, v); }},
    {"quad_order",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.quad_order = to_int(k, v); }},
    {"amplitude",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.amplitude = to_double(k, v); }},
    {"ffp_samples",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.ffp_samples = to_int(k, v); }},
    {"record_time",
     [](ScatterConfig &c, const std::string &k, const std::string &v) { c.record_time = to_bool(k, v); }},
    {"output_dir", [](ScatterConfig &c, const std::string &, const std::string &v) { c.output_dir = v; }},
  };
  return table;
}

// Short aliases accepted on input.
std::string canonical_key(const std::string &key)
{
  if (key == "NT" || key == "nt" || key == "L")
  {
    return "terms";
  }
  if (key == "p")
  {
    return "degree";
  }
  if (key == "r_0")
  {
    return "r0";
  }
  if (key == "Z")
  {
    return "bc";
  }
  if (key == "N_e")
  {
    return "radial_elements";
  }
  if (key == "m_e")
  {
    return "angular_elements";
  }
  return key;
}

// "abc:p:NT" -> three settings.
void apply_method(ScatterConfig &cfg, const std::string &method)
{
  const auto parts = split(method, ':');
  if (parts.size() != 3)
  {
    throw ConfigError("config: method must be abc:p:NT, got '" + method + "'");
  }
  apply_setting(cfg, "abc", parts[0]);
  apply_setting(cfg, "degree", parts[1]);
  apply_setting(cfg, "terms", parts[2]);
}

void apply_case(ScatterConfig &cfg, const std::string &text)
{
  for (const auto &item : split(text, ' '))
  {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
    {
      throw ConfigError("config: case entries must be key=value, got '" + item + "'");
    }
    apply_setting(cfg, trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
}

}  // namespace

std::vector<std::string> config_keys()
{
  std::vector<std::string> keys;
  for (const auto &[k, s] : setters())
  {
    keys.push_back(k);
  }
  return keys;
}

void apply_setting(ScatterConfig &cfg, const std::string &key_in, const std::string &value_in)
{
  const std::string key = canonical_key(trim(key_in));
  const std::string value = trim(value_in);
  if (key.rfind("sweep.", 0) == 0)
  {
    const std::string sub = canonical_key(key.substr(6));
    const auto list = split(value, ',');
    if (list.empty())
    {
      throw ConfigError("config: " + key + " needs at least one value");
    }
    if (sub != "method" && (sub == "name" || sub == "output_dir" ||
                            std::none_of(setters().begin(), setters().end(),
                                         [&](const auto &e) { return e.first == sub; })))
    {
      throw ConfigError("config: cannot sweep over '" + sub + "'");
    }
    // Reject malformed values now rather than at expansion.
    ScatterConfig probe;
    for (const auto &v : list)
    {
      sub == "method" ? apply_method(probe, v) : apply_setting(probe, sub, v);
    }
    cfg.sweep[sub] = list;
    return;
  }
  if (key.rfind("case.", 0) == 0)
  {
    const std::string label = key.substr(5);
    if (label.empty())
    {
      throw ConfigError("config: case needs a label");
    }
    ScatterConfig probe;
    apply_case(probe, value);
    cfg.cases.emplace_back(label, value);
    return;
  }
  for (const auto &[name, set] : setters())
  {
    if (name == key)
    {
      if (value.empty())
      {
        throw ConfigError("config: " + key + " needs a value");
      }
      set(cfg, key, value);
      return;
    }
  }
  throw ConfigError("config: unknown key '" + key + "'");
}

ScatterConfig parse_config(const std::string &text)
{
  ScatterConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line))
  {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
    {
      line.resize(hash);
    }
    line = trim(line);
    if (line.empty())
    {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
    {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    try
    {
      apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    catch (const ConfigError &e)
    {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

ScatterConfig load_config(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("config: cannot open '" + path.string() + "'");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate(const ScatterConfig &c)
{
  auto fail = [](const std::string &msg) { throw ConfigError("config: " + msg); };
  if (!(c.k > 0.0))
  {
    fail("wavenumber k must be positive");
  }
  if (!(c.r0 > 0.0))
  {
    fail("scatterer radius r0 must be positive");
  }
  if (!(c.R > c.r0))
  {
    fail("artificial boundary radius R must exceed r0");
  }
  if (c.terms < 1)
  {
    fail("number of expansion terms must be >= 1");
  }
  if (c.degree < 1 || c.degree > 20)
  {
    fail("degree must be between 1 and 20");
  }
  if ((c.radial_elements > 0) != (c.angular_elements > 0))
  {
    fail("give both radial_elements and angular_elements, or neither");
  }
  if (c.radial_elements < 0 || c.angular_elements < 0)
  {
    fail("element counts must be nonnegative");
  }
  if (c.radial_elements == 0 && !(c.n_lambda > 0.0))
  {
    fail("n_lambda must be positive when no element counts are given");
  }
  if (c.quad_order < 0)
  {
    fail("quad_order must be >= 0 (0 selects p + 1)");
  }
  if (c.ffp_samples < 8)
  {
    fail("ffp_samples must be >= 8");
  }
  const bool axisym = c.dimension == Dimension::Axisymmetric;
  if (axisym != (c.scatterer == reference::Scatterer::Sphere))
  {
    fail("the cylinder is planar and the sphere axisymmetric");
  }
  if (axisym != (c.abc == assembly::AbcKind::Wfe))
  {
    fail(axisym ? "axisymmetric runs use the wfe condition" : "planar runs use kfe, bgt1 or bgt2");
  }
  if (!c.cases.empty() || !c.sweep.empty())
  {
    for (const auto &s : expand_sweep(c))
    {
      validate(s);
    }
  }
}

std::vector<ScatterConfig> expand_sweep(const ScatterConfig &cfg)
{
  ScatterConfig base = cfg;
  base.sweep.clear();
  base.cases.clear();

  std::vector<ScatterConfig> level;
  if (cfg.cases.empty())
  {
    level.push_back(base);
  }
  for (const auto &[label, text] : cfg.cases)
  {
    ScatterConfig c = base;
    try
    {
      apply_case(c, text);
    }
    catch (const ConfigError &e)
    {
      throw ConfigError("case " + label + ": " + e.what());
    }
    level.push_back(c);
  }

  auto expand = [&](const std::string &key, const std::vector<std::string> &values)
  {
    std::vector<ScatterConfig> next;
    for (const auto &c : level)
    {
      for (const auto &v : values)
      {
        ScatterConfig d = c;
        if (key == "method")
        {
          apply_method(d, v);
        }
        else
        {
          apply_setting(d, key, v);
        }
        next.push_back(d);
      }
    }
    level.swap(next);
  };

  if (const auto it = cfg.sweep.find("method"); it != cfg.sweep.end())
  {
    expand("method", it->second);
  }
  for (const auto &[key, values] : cfg.sweep)
  {
    if (key != "method")
    {
      expand(key, values);
    }
  }
  return level;
}

}  // namespace feabc::harness
