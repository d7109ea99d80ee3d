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

#ifndef DIVGREEDY_PLOT_H_
#define DIVGREEDY_PLOT_H_

#include <iosfwd>
#include <span>
#include <string>

#include "divgreedy/sweep.h"

namespace divgreedy {

enum class PlotKind { kObjective, kDiversity };

// Standalone SVG: one series per (algorithm, constraint) pair, x the
// parameter value normalized to [0, 1] within its series, y the normalized
// metric. The objective kind draws the minimum (solid) and mean (dashed)
// values against the best-known column; the diversity kind draws the
// distance sum against its ceiling column. Series whose denominator column
// is zero fall back to the largest observed value and say so in the legend.
// Throws when `rows` is empty. Output is deterministic.
void EmitPlot(std::ostream& out, std::span<const SweepRow> rows,
              PlotKind kind);
void WritePlotFile(const std::string& path, std::span<const SweepRow> rows,
                   PlotKind kind);

}  // namespace divgreedy

#endif  // DIVGREEDY_PLOT_H_
