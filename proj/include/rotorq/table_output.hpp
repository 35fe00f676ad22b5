// Copyright 2026 The rotorq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tabular output: CSV with leading '#' comment lines, or space-aligned
// columns for terminals.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace rotorq {

/// Shortest-safe round-trip formatting (%.17g); "inf"/"-inf"/"nan" spelled out.
inline std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write_csv(std::ostream &os) const {
        for (const auto &c : comments) {
            os << "# " << c << '\n';
        }
        write_line(os, header);
        for (const auto &r : rows) {
            write_line(os, r);
        }
    }

    /// Right-aligned columns; comments are kept as '#' lines.
    void write_pretty(std::ostream &os) const {
        std::vector<std::size_t> width(header.size(), 0);
        auto widen = [&](const std::vector<std::string> &r) {
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
                width[i] = std::max(width[i], r[i].size());
            }
        };
        widen(header);
        for (const auto &r : rows) {
            widen(r);
        }
        for (const auto &c : comments) {
            os << "# " << c << '\n';
        }
        auto line = [&](const std::vector<std::string> &r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) {
                    os << "  ";
                }
                os << std::string(width[i] - std::min(width[i], r[i].size()), ' ') << r[i];
            }
            os << '\n';
        };
        line(header);
        for (const auto &r : rows) {
            line(r);
        }
    }

   private:
    static void write_line(std::ostream &os, const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) {
                os << ',';
            }
            os << cells[i];
        }
        os << '\n';
    }
};

}  // namespace rotorq
