// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "feabc/error.hpp"
#include "feabc/harness.hpp"

namespace feabc::harness
{

namespace
{

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

const std::array<const char *, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string xml_escape(const std::string &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

std::vector<std::string> parse_line(const std::string &line)
{
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i)
  {
    const char c = line[i];
    if (quoted)
    {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
      {
        cur += '"';
        ++i;
      }
      else if (c == '"')
      {
        quoted = false;
      }
      else
      {
        cur += c;
      }
    }
    else if (c == '"')
    {
      quoted = true;
    }
    else if (c == ',')
    {
      cells.push_back(cur);
      cur.clear();
    }
    else if (c != '\r')
    {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

double cell_value(const std::string &s)
{
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  return end != s.c_str() && *end == '\0' ? v : std::nan("");
}

struct Svg
{
  std::ostringstream body;

  void text(double x, double y, const std::string &s, const char *anchor = "middle",
            int size = 12, const char *extra = "")
  {
    body << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
         << "\" text-anchor=\"" << anchor << "\"" << extra << ">" << xml_escape(s) << "</text>\n";
  }

  void line(double x0, double y0, double x1, double y1, const char *stroke, double w = 1.0,
            const char *extra = "")
  {
    body << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
         << "\" y2=\"" << num(y1) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(w)
         << "\"" << extra << "/>\n";
  }

  std::string str() const
  {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
       << "\" font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

void write_file(const std::filesystem::path &p, const std::string &text)
{
  std::ofstream out(p, std::ios::binary);
  if (!out || !(out << text))
  {
    throw Error("plot: cannot write '" + p.string() + "'");
  }
}

// Shared metadata line: columns whose value is the same in every row.
std::string metadata(const CsvTable &t)
{
  std::string meta;
  for (const char *name : {"dimension", "scatterer", "Z", "k", "r_0", "R", "abc", "NT", "p"})
  {
    const int c = t.column(name);
    if (c < 0)
    {
      continue;
    }
    std::set<std::string> values;
    for (const auto &r : t.rows)
    {
      values.insert(r[c]);
    }
    if (values.size() == 1)
    {
      meta += (meta.empty() ? "" : ", ") + std::string(name) + "=" + *values.begin();
    }
  }
  return meta;
}

struct Series
{
  std::string name;
  std::vector<std::pair<double, double>> points;
};

std::string loglog_plot(const std::vector<Series> &series, const std::string &ylabel,
                        const std::string &title)
{
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto &s : series)
  {
    for (const auto &[x, y] : s.points)
    {
      xmin = std::min(xmin, std::log10(x));
      xmax = std::max(xmax, std::log10(x));
      ymin = std::min(ymin, std::log10(y));
      ymax = std::max(ymax, std::log10(y));
    }
  }
  Svg svg;
  svg.text(kWidth / 2.0, 28.0, title, "middle", 14);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  svg.body << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
           << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg.text(kLeft + pw / 2.0, kHeight - 15.0, "h (log scale)");
  svg.text(20.0, kTop + ph / 2.0, ylabel + " (log scale)", "middle", 12,
           (" transform=\"rotate(-90 20 " + num(kTop + ph / 2.0) + ")\"").c_str());
  if (!std::isfinite(xmin))
  {
    svg.text(kLeft + pw / 2.0, kTop + ph / 2.0, "no positive data");
    return svg.str();
  }
  // Pad degenerate ranges so a single point lands in the middle.
  auto pad = [](double &lo, double &hi, double minspan)
  {
    if (hi - lo < minspan)
    {
      const double mid = 0.5 * (lo + hi);
      lo = mid - 0.5 * minspan;
      hi = mid + 0.5 * minspan;
    }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  };
  pad(xmin, xmax, 0.2);
  pad(ymin, ymax, 1.0);
  auto px = [&](double lx) { return kLeft + (lx - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double ly) { return kTop + ph - (ly - ymin) / (ymax - ymin) * ph; };

  for (int d = static_cast<int>(std::ceil(ymin)); d <= static_cast<int>(std::floor(ymax)); ++d)
  {
    svg.line(kLeft, py(d), kLeft + pw, py(d), "#dddddd");
    svg.text(kLeft - 6.0, py(d) + 4.0, "1e" + std::to_string(d), "end", 11);
  }
  const double xstep = (xmax - xmin) > 1.5 ? 1.0 : 0.1;
  for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12; t += xstep)
  {
    svg.line(px(t), kTop, px(t), kTop + ph, "#dddddd");
    svg.text(px(t), kTop + ph + 16.0, label(std::pow(10.0, t)), "middle", 11);
  }
  for (std::size_t i = 0; i < series.size(); ++i)
  {
    const char *color = kPalette[i % kPalette.size()];
    const auto &pts = series[i].points;
    if (pts.size() > 1)
    {
      svg.body << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto &[x, y] : pts)
      {
        svg.body << num(px(std::log10(x))) << ',' << num(py(std::log10(y))) << ' ';
      }
      svg.body << "\"/>\n";
    }
    for (const auto &[x, y] : pts)
    {
      svg.body << "<circle cx=\"" << num(px(std::log10(x))) << "\" cy=\"" << num(py(std::log10(y)))
               << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(i);
    svg.line(kWidth - kRight + 12.0, ly - 4.0, kWidth - kRight + 32.0, ly - 4.0, color, 2.0);
    svg.text(kWidth - kRight + 38.0, ly, series[i].name, "start", 11);
  }
  return svg.str();
}

// Blue-to-yellow ramp for t in [0, 1].
std::string ramp(double t)
{
  static const std::array<std::array<double, 3>, 5> stops = {
    {{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const int i = std::min(3, static_cast<int>(t));
  const double f = t - i;
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(stops[i][0] + f * (stops[i + 1][0] - stops[i][0])),
                static_cast<int>(stops[i][1] + f * (stops[i + 1][1] - stops[i][1])),
                static_cast<int>(stops[i][2] + f * (stops[i + 1][2] - stops[i][2])));
  return buf;
}

std::string heatmap(const std::vector<double> &xs, const std::vector<double> &ys,
                    const std::map<std::pair<double, double>, double> &cells,
                    const std::string &xlabel, const std::string &ylabel,
                    const std::string &title)
{
  double lo = INFINITY, hi = -INFINITY;
  for (const auto &[key, v] : cells)
  {
    lo = std::min(lo, std::log10(v));
    hi = std::max(hi, std::log10(v));
  }
  if (hi - lo < 1e-12)
  {
    hi = lo + 1.0;
  }
  Svg svg;
  svg.text(kWidth / 2.0, 28.0, title, "middle", 14);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const double cw = pw / static_cast<double>(xs.size());
  const double ch = ph / static_cast<double>(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    svg.text(kLeft + (i + 0.5) * cw, kTop + ph + 16.0, label(xs[i]), "middle", 11);
    for (std::size_t j = 0; j < ys.size(); ++j)
    {
      const double y = kTop + ph - (j + 1.0) * ch;
      const auto it = cells.find({xs[i], ys[j]});
      const std::string fill =
        it == cells.end() ? "#eeeeee" : ramp((std::log10(it->second) - lo) / (hi - lo));
      svg.body << "<rect x=\"" << num(kLeft + i * cw) << "\" y=\"" << num(y) << "\" width=\""
               << num(cw) << "\" height=\"" << num(ch) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  for (std::size_t j = 0; j < ys.size(); ++j)
  {
    svg.text(kLeft - 6.0, kTop + ph - (j + 0.5) * ch + 4.0, label(ys[j]), "end", 11);
  }
  svg.text(kLeft + pw / 2.0, kHeight - 15.0, xlabel);
  svg.text(20.0, kTop + ph / 2.0, ylabel, "middle", 12,
           (" transform=\"rotate(-90 20 " + num(kTop + ph / 2.0) + ")\"").c_str());
  // Color bar.
  const double bx = kWidth - kRight + 30.0;
  for (int s = 0; s < 50; ++s)
  {
    svg.body << "<rect x=\"" << num(bx) << "\" y=\"" << num(kTop + ph - (s + 1) * ph / 50.0)
             << "\" width=\"20\" height=\"" << num(ph / 50.0 + 0.5) << "\" fill=\""
             << ramp(s / 49.0) << "\"/>\n";
  }
  svg.text(bx + 26.0, kTop + ph, "1e" + num(lo), "start", 11);
  svg.text(bx + 26.0, kTop + 10.0, "1e" + num(hi), "start", 11);
  svg.text(bx + 10.0, kTop - 8.0, "err_ffp", "middle", 11);
  return svg.str();
}

}  // namespace

int CsvTable::column(const std::string &name) const
{
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

CsvTable read_csv(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("plot: cannot open '" + path.string() + "'");
  }
  CsvTable t;
  std::string line;
  while (std::getline(in, line))
  {
    if (line.empty() || line == "\r")
    {
      continue;
    }
    auto cells = parse_line(line);
    if (t.header.empty())
    {
      t.header = std::move(cells);
    }
    else
    {
      if (cells.size() != t.header.size())
      {
        throw ConfigError("plot: row " + std::to_string(t.rows.size() + 1) + " has " +
                          std::to_string(cells.size()) + " cells, header has " +
                          std::to_string(t.header.size()));
      }
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path &csv,
                                              const std::filesystem::path &dir)
{
  const CsvTable t = read_csv(csv);
  if (t.rows.empty())
  {
    throw ConfigError("plot: '" + csv.string() + "' has no data rows");
  }
  for (const char *name : {"h", "abc", "NT", "p", "R", "k", "err_ffp"})
  {
    if (t.column(name) < 0)
    {
      throw ConfigError(std::string("plot: missing column '") + name + "'");
    }
  }
  std::filesystem::create_directories(dir);
  const std::string stem = csv.stem().string();
  const std::string meta = metadata(t);
  std::vector<std::filesystem::path> written;

  const int ch = t.column("h");
  const int status = t.column("status");
  auto ok = [&](const std::vector<std::string> &r) { return status < 0 || r[status] == "ok"; };

  // Series key: everything that is not the mesh.
  auto series_name = [&](const std::vector<std::string> &r)
  {
    std::string s = r[t.column("abc")] + " p=" + r[t.column("p")] + " NT=" + r[t.column("NT")];
    for (const char *extra : {"R", "k"})
    {
      std::set<std::string> v;
      for (const auto &row : t.rows)
      {
        v.insert(row[t.column(extra)]);
      }
      if (v.size() > 1)
      {
        s += std::string(" ") + extra + "=" + r[t.column(extra)];
      }
    }
    return s;
  };

  for (const char *metric : {"err_boundary", "err_domain", "err_ffp"})
  {
    const int cm = t.column(metric);
    if (cm < 0)
    {
      continue;
    }
    std::vector<Series> series;
    for (const auto &r : t.rows)
    {
      const double x = cell_value(r[ch]);
      const double y = cell_value(r[cm]);
      if (!ok(r) || !(x > 0.0) || !(y > 0.0))
      {
        continue;
      }
      const std::string name = series_name(r);
      auto it = std::find_if(series.begin(), series.end(), [&](const Series &s) { return s.name == name; });
      if (it == series.end())
      {
        series.push_back({name, {}});
        it = series.end() - 1;
      }
      it->points.emplace_back(x, y);
    }
    for (auto &s : series)
    {
      std::sort(s.points.begin(), s.points.end());
    }
    const auto path = dir / (stem + "_" + metric + ".svg");
    write_file(path, loglog_plot(series, metric, meta.empty() ? stem : meta));
    written.push_back(path);
  }

  // Heatmaps of the FFP error over (NT, n_lambda) and (NT, p).
  const int cf = t.column("err_ffp");
  auto try_heatmap = [&](const char *xname, const char *tag)
  {
    const int cx = t.column(xname);
    const int cy = t.column("NT");
    if (cx < 0)
    {
      return;
    }
    std::set<double> xs, ys;
    std::map<std::pair<double, double>, double> cells;
    for (const auto &r : t.rows)
    {
      const double x = cell_value(r[cx]);
      const double y = cell_value(r[cy]);
      const double v = cell_value(r[cf]);
      if (!ok(r) || !std::isfinite(x) || !std::isfinite(y) || !(v > 0.0))
      {
        continue;
      }
      xs.insert(x);
      ys.insert(y);
      cells[{x, y}] = v;
    }
    if (xs.size() < 2 || ys.size() < 2)
    {
      return;
    }
    const auto path = dir / (stem + "_ffp_" + tag + ".svg");
    write_file(path, heatmap({xs.begin(), xs.end()}, {ys.begin(), ys.end()}, cells, xname, "NT",
                             "FFP relative L2 error" + (meta.empty() ? "" : " (" + meta + ")")));
    written.push_back(path);
  };
  try_heatmap("n_lambda", "nt_nlambda");
  try_heatmap("p", "nt_p");
  return written;
}

}  // namespace feabc::harness
