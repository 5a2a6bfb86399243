// Copyright 2026 The concroc Authors
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

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "concroc/cli.hpp"
#include "concroc/errors.hpp"

namespace concroc {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 60.0;
constexpr double kPlot = kSize - 2.0 * kMargin;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double px(double t) { return kMargin + kPlot * t; }
double py(double r) { return kMargin + kPlot * (1.0 - r); }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<double>& grid, const std::vector<SvgCurve>& curves) {
    for (const auto& c : curves) {
        if (c.values.size() != grid.size()) throw Error(ErrorCode::LengthMismatch, "curve '" + c.label + "' does not match the grid");
    }
    std::ostringstream s;
    const std::string size = coord(kSize);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    s << "<rect x=\"" << coord(kMargin) << "\" y=\"" << coord(kMargin) << "\" width=\"" << coord(kPlot)
      << "\" height=\"" << coord(kPlot) << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "<line class=\"diagonal\" x1=\"" << coord(px(0)) << "\" y1=\"" << coord(py(0)) << "\" x2=\"" << coord(px(1))
      << "\" y2=\"" << coord(py(1)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
    for (double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        s << "<text x=\"" << coord(px(tick)) << "\" y=\"" << coord(kSize - kMargin + 18) << "\" font-size=\"11\" text-anchor=\"middle\">"
          << coord(tick) << "</text>\n";
        s << "<text x=\"" << coord(kMargin - 8) << "\" y=\"" << coord(py(tick) + 4) << "\" font-size=\"11\" text-anchor=\"end\">"
          << coord(tick) << "</text>\n";
    }
    s << "<text x=\"" << coord(kSize / 2) << "\" y=\"" << coord(kSize - 15) << "\" font-size=\"12\" text-anchor=\"middle\">false positive fraction</text>\n";
    s << "<text x=\"15\" y=\"" << coord(kSize / 2) << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << coord(kSize / 2) << ")\">true positive fraction</text>\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < grid.size(); ++k) {
            if (k) s << ' ';
            s << coord(px(grid[k])) << ',' << coord(py(curves[i].values[k]));
        }
        s << "\"/>\n";
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        const double y = py(0.0) - 12.0 - 16.0 * static_cast<double>(curves.size() - 1 - i);
        s << "<g class=\"legend\"><line x1=\"" << coord(px(0.6)) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(px(0.6) + 20)
          << "\" y2=\"" << coord(y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text x=\"" << coord(px(0.6) + 26)
          << "\" y=\"" << coord(y + 4) << "\" font-size=\"11\">" << escape(curves[i].label) << "</text></g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

void write_output(const std::string& path, std::string_view text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    f << text;
    if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

}  // namespace concroc
