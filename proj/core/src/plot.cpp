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
#include "ahl/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ahl {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr std::array<const char *, 6> kColors = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
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

struct Range {
    double lo;
    double hi;
};

Range padded(double lo, double hi) {
    if (hi - lo < 1e-12) {
        const double pad = std::max(std::abs(lo) * 0.05, 0.5);
        return {lo - pad, hi + pad};
    }
    return {lo, hi};
}

} // namespace

void validate(const PlotSpec &spec) {
    if (spec.series.empty()) {
        throw std::invalid_argument("PlotSpec: no series");
    }
    for (const auto &s : spec.series) {
        if (s.x.empty() || s.x.size() != s.y.size()) {
            throw std::invalid_argument("PlotSpec: series '" + s.label +
                                        "' is empty or has mismatched lengths");
        }
        const auto finite = [](double v) { return std::isfinite(v); };
        if (!std::all_of(s.x.begin(), s.x.end(), finite) ||
            !std::all_of(s.y.begin(), s.y.end(), finite)) {
            throw std::invalid_argument("PlotSpec: series '" + s.label +
                                        "' has a non-finite value");
        }
    }
}

std::string render_svg(const PlotSpec &spec) {
    validate(spec);
    double xmin = spec.series[0].x[0], xmax = xmin;
    double ymin = spec.series[0].y[0], ymax = ymin;
    for (const auto &s : spec.series) {
        const auto [xl, xh] = std::minmax_element(s.x.begin(), s.x.end());
        const auto [yl, yh] = std::minmax_element(s.y.begin(), s.y.end());
        xmin = std::min(xmin, *xl);
        xmax = std::max(xmax, *xh);
        ymin = std::min(ymin, *yl);
        ymax = std::max(ymax, *yh);
    }
    const Range xr = padded(xmin, xmax);
    const Range yr = padded(ymin, ymax);
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) {
        return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
           "height=\"400\" viewBox=\"0 0 640 400\" font-family=\"sans-serif\" "
           "font-size=\"12\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(spec.title) + "</text>\n";
    out += "<rect x=\"" + fmt("%.1f", kLeft) + "\" y=\"" + fmt("%.1f", kTop) +
           "\" width=\"" + fmt("%.1f", pw) + "\" height=\"" + fmt("%.1f", ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    // Axis extents at the frame corners.
    out += "<text x=\"" + fmt("%.1f", kLeft) + "\" y=\"" +
           fmt("%.1f", kTop + ph + 16) + "\" text-anchor=\"middle\">" +
           fmt("%.4g", xr.lo) + "</text>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft + pw) + "\" y=\"" +
           fmt("%.1f", kTop + ph + 16) + "\" text-anchor=\"middle\">" +
           fmt("%.4g", xr.hi) + "</text>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft - 6) + "\" y=\"" +
           fmt("%.1f", kTop + ph + 4) + "\" text-anchor=\"end\">" +
           fmt("%.4g", yr.lo) + "</text>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft - 6) + "\" y=\"" +
           fmt("%.1f", kTop + 4) + "\" text-anchor=\"end\">" +
           fmt("%.4g", yr.hi) + "</text>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) + "\" y=\"" +
           fmt("%.1f", kHeight - 12) + "\" text-anchor=\"middle\">" +
           escape(spec.x_label) + "</text>\n";
    out += "<text x=\"16\" y=\"" + fmt("%.1f", kTop + ph / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           fmt("%.1f", kTop + ph / 2) + ")\">" + escape(spec.y_label) +
           "</text>\n";

    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const auto &s = spec.series[i];
        const char *color = kColors[i % kColors.size()];
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (k > 0) {
                out += ' ';
            }
            out += fmt("%.2f", px(s.x[k])) + "," + fmt("%.2f", py(s.y[k]));
        }
        out += "\"/>\n";
        const double ly = kTop + 14.0 + 18.0 * static_cast<double>(i);
        const double lx = kLeft + pw + 12.0;
        out += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" +
               fmt("%.1f", ly - 4) + "\" x2=\"" + fmt("%.1f", lx + 20) +
               "\" y2=\"" + fmt("%.1f", ly - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt("%.1f", lx + 26) + "\" y=\"" +
               fmt("%.1f", ly) + "\">" + escape(s.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void emit_plot(const PlotSpec &spec) {
    const std::string svg = render_svg(spec);
    std::ofstream out(spec.path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("emit_plot: cannot open " + spec.path);
    }
    out << svg;
    if (!out) {
        throw std::runtime_error("emit_plot: write failed for " + spec.path);
    }
}

} // namespace ahl
