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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "concroc/cli.hpp"
#include "concroc/errors.hpp"

namespace concroc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(delim, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::InputFormat, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t resolve_column(const std::vector<std::string_view>& header, const std::string& spec,
                           std::size_t fallback, std::size_t line_no) {
    if (spec.empty()) {
        if (fallback >= header.size()) fail(line_no, "header has fewer than two columns");
        return fallback;
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == spec) return i;
    }
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), index);
    if (ec == std::errc() && ptr == spec.data() + spec.size() && index >= 1 && index <= header.size()) {
        return index - 1;
    }
    fail(line_no, "no column '" + spec + "' in header");
}

double parse_number(std::string_view field, std::size_t line_no) {
    double v = 0.0;
    const char* begin = field.data();
    if (!field.empty() && field.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        fail(line_no, "cannot parse '" + std::string(field) + "' as a number");
    }
    if (!std::isfinite(v)) fail(line_no, "value is not finite");
    return v;
}

void require_two_distinct(const std::vector<double>& v, const char* group) {
    const std::set<double> distinct(v.begin(), v.end());
    if (distinct.size() < 2) {
        throw Error(ErrorCode::InputFormat, std::string("group ") + group + " has fewer than 2 distinct values");
    }
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Dataset parse_csv(std::string_view text, const CsvOptions& opts) {
    Dataset d;
    d.digest = fnv1a64(text);
    std::size_t line_no = 0;
    std::size_t value_idx = 0, status_idx = 0, columns = 0;
    bool have_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split(raw, opts.delimiter);
        if (!have_header) {
            value_idx = resolve_column(fields, opts.value_col, 0, line_no);
            status_idx = resolve_column(fields, opts.status_col, 1, line_no);
            if (value_idx == status_idx) fail(line_no, "value and status columns coincide");
            columns = fields.size();
            have_header = true;
            continue;
        }
        if (fields.size() != columns) {
            fail(line_no, "expected " + std::to_string(columns) + " fields, found " + std::to_string(fields.size()));
        }
        double value = parse_number(fields[value_idx], line_no);
        const std::string_view status = fields[status_idx];
        if (status != "0" && status != "1") fail(line_no, "status must be 0 or 1, found '" + std::string(status) + "'");
        if (opts.log_transform) {
            if (!(value > 0.0)) fail(line_no, "log-transform needs a positive value");
            value = std::log(value);
        }
        (status == "0" ? d.controls : d.cases).push_back(value);
    }
    if (!have_header) throw Error(ErrorCode::InputFormat, "input has no header line");
    require_two_distinct(d.controls, "controls");
    require_two_distinct(d.cases, "cases");
    return d;
}

Dataset load_csv(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str(), opts);
}

}  // namespace concroc
