// Copyright 2026 The AHL Simulator Authors
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
/**
 * @file plot.hpp
 * Minimal line-plot writer. Output depends only on the input values, so a
 * seeded run always renders the same bytes.
 */
#pragma once

#include <string>
#include <vector>

namespace ahl {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    std::string path; // output file for emit_plot
};

/// Throws std::invalid_argument on an empty series list, an empty series,
/// mismatched lengths or a non-finite value.
void validate(const PlotSpec &spec);

/// Standalone SVG document: frame, axis extents, one polyline per series
/// and a legend.
std::string render_svg(const PlotSpec &spec);

/// Writes render_svg(spec) to spec.path; I/O errors carry the path.
void emit_plot(const PlotSpec &spec);

} // namespace ahl
