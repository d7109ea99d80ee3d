// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divgreedy/plot.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace divgreedy {
namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 440;
constexpr int kLeft = 60;
constexpr int kRight = 240;  // room for the legend
constexpr int kTop = 30;
constexpr int kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Series {
  std::string label;
  bool fallback_denominator = false;
  std::vector<std::pair<double, double>> min_points;   // x in [0,1], y ratio
  std::vector<std::pair<double, double>> mean_points;  // objective kind only
};

void DrawPolyline(std::ostream& out,
                  const std::vector<std::pair<double, double>>& points,
                  const char* color, bool dashed, double y_scale) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto map_x = [&](double x) { return kLeft + x * plot_w; };
  const auto map_y = [&](double y) {
    return kTop + plot_h - (y / y_scale) * plot_h;
  };
  if (points.size() == 1) {
    out << "  <circle cx=\"" << Num(map_x(points[0].first)) << "\" cy=\""
        << Num(map_y(points[0].second)) << "\" r=\"3\" fill=\"" << color
        << "\"/>\n";
    return;
  }
  out << "  <polyline fill=\"none\" stroke=\"" << color << "\""
      << (dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"";
  for (const auto& [x, y] : points) {
    out << Num(map_x(x)) << ',' << Num(map_y(y)) << ' ';
  }
  out << "\"/>\n";
}

}  // namespace

void EmitPlot(std::ostream& out, std::span<const SweepRow> rows,
              PlotKind kind) {
  if (rows.empty()) throw std::invalid_argument("EmitPlot: no rows");

  // Group into series and find each series' parameter range and fallback
  // denominator before normalizing.
  std::map<std::string, std::vector<const SweepRow*>> groups;
  for (const SweepRow& row : rows) {
    groups[row.algo + "/" + row.constraint + "/" + row.graph].push_back(&row);
  }
  std::vector<Series> series;
  for (auto& [label, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const SweepRow* a, const SweepRow* b) {
                return a->param < b->param;
              });
    int lo = members.front()->param;
    int hi = members.back()->param;
    Series s;
    s.label = label;
    std::int64_t fallback = 0;
    for (const SweepRow* row : members) {
      fallback = std::max(fallback, kind == PlotKind::kObjective
                                        ? row->min_f
                                        : row->ss);
    }
    for (const SweepRow* row : members) {
      const double x =
          hi == lo ? 0.5 : static_cast<double>(row->param - lo) / (hi - lo);
      std::int64_t denom =
          kind == PlotKind::kObjective ? row->best_known : row->ss_bound;
      if (denom == 0) {
        denom = std::max<std::int64_t>(fallback, 1);
        s.fallback_denominator = true;
      }
      if (kind == PlotKind::kObjective) {
        s.min_points.emplace_back(x, static_cast<double>(row->min_f) / denom);
        s.mean_points.emplace_back(x, row->mean_f / denom);
      } else {
        s.min_points.emplace_back(x, static_cast<double>(row->ss) / denom);
      }
    }
    series.push_back(std::move(s));
  }

  double y_max = 1.0;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.min_points) y_max = std::max(y_max, y);
    for (const auto& [x, y] : s.mean_points) y_max = std::max(y_max, y);
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  out << "  <g stroke=\"#333\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h
      << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
      << "\"/>\n"
      << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\""
      << kLeft << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "  </g>\n";
  out << "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double frac = i / 4.0;
    const double y = kTop + plot_h - frac * plot_h;
    out << "    <text x=\"" << kLeft - 34 << "\" y=\"" << Num(y + 4)
        << "\">" << Num(frac * y_max) << "</text>\n"
        << "    <line x1=\"" << kLeft - 4 << "\" y1=\"" << Num(y)
        << "\" x2=\"" << kLeft << "\" y2=\"" << Num(y)
        << "\" stroke=\"#333\"/>\n";
    const double x = kLeft + frac * plot_w;
    out << "    <text x=\"" << Num(x - 8) << "\" y=\""
        << kTop + plot_h + 18 << "\">" << Num(frac) << "</text>\n"
        << "    <line x1=\"" << Num(x) << "\" y1=\"" << kTop + plot_h
        << "\" x2=\"" << Num(x) << "\" y2=\"" << kTop + plot_h + 4
        << "\" stroke=\"#333\"/>\n";
  }
  out << "    <text x=\"" << kLeft + plot_w / 2 - 60 << "\" y=\""
      << kHeight - 12 << "\">normalized parameter value</text>\n"
      << "    <text x=\"12\" y=\"" << kTop - 10 << "\">"
      << (kind == PlotKind::kObjective ? "objective / best known"
                                       : "distance sum / ceiling")
      << "</text>\n"
      << "  </g>\n";

  int color = 0;
  double legend_y = kTop + 10;
  for (const Series& s : series) {
    const char* c = kPalette[color % 8];
    DrawPolyline(out, s.min_points, c, false, y_max);
    if (!s.mean_points.empty()) DrawPolyline(out, s.mean_points, c, true, y_max);
    out << "  <g font-family=\"sans-serif\" font-size=\"11\">\n"
        << "    <line x1=\"" << kWidth - kRight + 16 << "\" y1=\""
        << Num(legend_y - 4) << "\" x2=\"" << kWidth - kRight + 40
        << "\" y2=\"" << Num(legend_y - 4) << "\" stroke=\"" << c << "\"/>\n"
        << "    <text x=\"" << kWidth - kRight + 46 << "\" y=\""
        << Num(legend_y) << "\">" << s.label
        << (s.fallback_denominator ? " (norm: max observed)" : "")
        << (kind == PlotKind::kObjective ? " min+mean" : "") << "</text>\n"
        << "  </g>\n";
    legend_y += 16;
    ++color;
  }
  out << "</svg>\n";
}

void WritePlotFile(const std::string& path, std::span<const SweepRow> rows,
                   PlotKind kind) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write plot file: " + path);
  EmitPlot(out, rows, kind);
}

}  // namespace divgreedy
