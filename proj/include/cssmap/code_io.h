// Copyright 2026 The cssmap Authors
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

#ifndef CSSMAP_CODE_IO_H
#define CSSMAP_CODE_IO_H

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cssmap/css_code.h"
#include "cssmap/error.h"

namespace cssmap {

// Line-oriented text format:
//
//   css-code v1
//   n <int>
//   Hz <rows>
//   <rows lines of 0/1, length n>
//   Hx <rows>
//   <rows lines of 0/1, length n>
//
// The final newline is optional. Anything else is rejected.

inline std::string write_code_text(const BitMatrix &hz, const BitMatrix &hx) {
    std::string out = "css-code v1\n";
    out += "n " + std::to_string(hz.cols()) + "\n";
    out += "Hz " + std::to_string(hz.rows()) + "\n";
    out += hz.str();
    out += "Hx " + std::to_string(hx.rows()) + "\n";
    out += hx.str();
    return out;
}

inline std::string write_code_text(const CssCode &code) {
    return write_code_text(code.hz(), code.hx());
}

struct CheckMatrices {
    BitMatrix hz;
    BitMatrix hx;
};

namespace detail {

inline size_t parse_count(std::string_view token, size_t line) {
    if (token.empty() || token.size() > 9) {
        throw ParseError(line, "expected a non-negative integer");
    }
    size_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
        }
        value = value * 10 + (size_t)(c - '0');
    }
    return value;
}

inline size_t parse_header(std::string_view text, std::string_view keyword, size_t line) {
    if (text.size() <= keyword.size() + 1 || text.substr(0, keyword.size()) != keyword ||
        text[keyword.size()] != ' ') {
        throw ParseError(line, "expected '" + std::string(keyword) + " <int>'");
    }
    return parse_count(text.substr(keyword.size() + 1), line);
}

}  // namespace detail

/// Parses the css-code v1 format. Errors carry the 1-based offending line.
/// Does not check commutation; CssCode's constructor does.
inline CheckMatrices parse_code_text(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }

    size_t at = 0;
    auto next = [&](const char *what) -> std::string_view {
        if (at >= lines.size()) {
            throw ParseError(lines.size() + 1, std::string("unexpected end of input, expected ") + what);
        }
        return lines[at++];
    };

    if (next("header") != "css-code v1") {
        throw ParseError(1, "expected 'css-code v1'");
    }
    std::string_view n_line = next("'n <int>'");
    size_t n = detail::parse_header(n_line, "n", at);
    if (n == 0) {
        throw ParseError(at, "n must be positive");
    }

    auto read_block = [&](std::string_view keyword) {
        std::string_view header = next(keyword.data());
        size_t rows = detail::parse_header(header, keyword, at);
        BitMatrix m(n);
        for (size_t r = 0; r < rows; r++) {
            std::string_view row = next("matrix row");
            if (row.size() != n) {
                throw ParseError(
                    at, "row has " + std::to_string(row.size()) + " characters, expected " + std::to_string(n));
            }
            BitVector v(n);
            for (size_t c = 0; c < n; c++) {
                if (row[c] == '1') {
                    v.set(c, true);
                } else if (row[c] != '0') {
                    throw ParseError(at, "invalid character in matrix row");
                }
            }
            m.push_row(std::move(v));
        }
        return m;
    };

    CheckMatrices out;
    out.hz = read_block("Hz");
    out.hx = read_block("Hx");
    if (at != lines.size()) {
        throw ParseError(at + 1, "trailing content after Hx block");
    }
    return out;
}

inline CssCode read_code_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open code file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto m = parse_code_text(buf.str());
    return CssCode(std::move(m.hz), std::move(m.hx));
}

/// FNV-1a 64-bit hash of the canonical text form, as 16 hex digits.
inline std::string code_hash(const CssCode &code) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : write_code_text(code)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char *digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; i--) {
        out[(size_t)i] = digits[h & 15];
        h >>= 4;
    }
    return out;
}

}  // namespace cssmap

#endif
