/*
   Copyright 2026 The zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "zpr/matrix_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace zpr {

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(start, end == std::string::npos ? end : end - start);
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) lines.push_back({number, line});
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return lines;
}

std::pair<std::int64_t, std::int64_t> parse_header(const Line& line, const std::string& keyword) {
    std::istringstream in(line.text);
    std::string word;
    std::int64_t a = 0, b = 0;
    if (!(in >> word) || word != keyword || !(in >> a >> b)) {
        throw ParseError("expected `" + keyword + " <int> <int>`", line.number, 1);
    }
    std::string rest;
    if (in >> rest) throw ParseError("trailing content after `" + keyword + "` header", line.number, 1);
    return {a, b};
}

}  // namespace

MatrixFile parse_matrix_file(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.size() < 2) throw ParseError("missing `ring` and `size` headers", 1, 1);
    auto [p, r] = parse_header(lines[0], "ring");
    std::optional<RingSpec> ring;
    try {
        ring.emplace(p, static_cast<int>(r));
    } catch (const InvalidRing& e) {
        throw ParseError(e.what(), lines[0].number, 1);
    }
    auto [k, n] = parse_header(lines[1], "size");
    if (k < 1 || n < 1) throw ParseError("matrix dimensions must be positive", lines[1].number, 1);
    std::size_t expected = static_cast<std::size_t>(k) * static_cast<std::size_t>(n);
    if (lines.size() - 2 != expected) {
        throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                             std::to_string(lines.size() - 2),
                         lines.size() > 2 ? lines.back().number : lines[1].number, 1);
    }
    PolyMatrix m(*ring, static_cast<int>(k), static_cast<int>(n));
    for (std::size_t i = 0; i < expected; ++i) {
        const Line& line = lines[2 + i];
        try {
            m.set(static_cast<int>(i / static_cast<std::size_t>(n)),
                  static_cast<int>(i % static_cast<std::size_t>(n)),
                  parse_poly(line.text, *ring));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line.number, e.col);
        }
    }
    return MatrixFile{*ring, std::move(m)};
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_file(buffer.str());
}

std::string format_matrix_file(const PolyMatrix& matrix) {
    std::ostringstream out;
    out << "ring " << matrix.ring().p() << ' ' << matrix.ring().r() << '\n';
    out << "size " << matrix.rows() << ' ' << matrix.cols() << '\n';
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) out << to_string(matrix.at(i, j)) << '\n';
    }
    return out.str();
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

}  // namespace zpr
