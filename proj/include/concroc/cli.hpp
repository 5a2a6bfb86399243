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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concroc {

inline constexpr std::string_view kVersion = "1.0.0";

struct CsvOptions {
    char delimiter = ',';
    // Column name from the header, or a 1-based index. Empty = first /
    // second column.
    std::string value_col;
    std::string status_col;
    bool log_transform = false;
};

struct Dataset {
    std::vector<double> controls;  // status 0
    std::vector<double> cases;     // status 1
    std::uint64_t digest = 0;      // FNV-1a of the file bytes
};

std::uint64_t fnv1a64(std::string_view bytes);

// Parses CSV text: '#' lines and blank lines skipped, first remaining line is
// the header. Throws InputFormat naming the offending line.
Dataset parse_csv(std::string_view text, const CsvOptions& opts = {});
// Throws IoError when the file cannot be read.
Dataset load_csv(const std::string& path, const CsvOptions& opts = {});

struct SvgCurve {
    std::string label;
    std::vector<double> values;  // on the shared t grid
};

// Standalone ROC plot on the unit square with the diagonal and a legend.
// Throws LengthMismatch when a curve does not match the grid.
std::string render_svg(const std::vector<double>& grid, const std::vector<SvgCurve>& curves);

// Writes text to path, or to `out` when path is "-". Throws IoError.
void write_output(const std::string& path, std::string_view text, std::ostream& out);

// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

// Command-line entry point; args excludes the program name. Returns the
// process exit code: 0 success, 2 input error, 3 numerical failure. Errors
// are written to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concroc
