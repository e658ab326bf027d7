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

#ifndef CSSMAP_CODE_ZOO_H
#define CSSMAP_CODE_ZOO_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cssmap/css_code.h"
#include "cssmap/error.h"

namespace cssmap {

// Qubit index layouts
// -------------------
// toric2d(L):       edge (x, y, o) -> 2 (L y + x) + o; o = 0 joins (x,y)-(x+1,y),
//                   o = 1 joins (x,y)-(x,y+1). Hx row L y + x is the vertex (x, y),
//                   Hz row L y + x the plaquette with lower-left corner (x, y).
// surface2d(Lx,Ly): vertical edge V(i, j), i < Lx, j < Ly -> Lx j + i;
//                   horizontal edge H(i, j), i < Lx-1, j < Ly-1 -> Lx Ly + (Lx-1) j + i.
//                   Vertex rows (i, j), j < Ly-1, sit between V(i, j) and V(i, j+1);
//                   the top and bottom V edges dangle (rough), the left and right
//                   vertex columns end the lattice (smooth).
//                   Hx row Lx j + i = vertex (i, j); Hz row (Lx-1) j + i = plaquette
//                   between V(i, j) and V(i+1, j).
// color666(Lx,Ly):  honeycomb torus, two sites per unit cell: A(i, j) -> 2 (Lx j + i),
//                   B(i, j) -> 2 (Lx j + i) + 1. Face (i, j) is the hexagon
//                   A(i,j) B(i,j) A(i,j+1) B(i-1,j+1) A(i-1,j+1) B(i-1,j) with color
//                   (i + 2 j) mod 3. Hx = Hz, row Lx j + i.
// toric3d(L):       edge (r, d) -> 3 (L^2 z + L y + x) + d, d in {x, y, z}.
//                   Hx row = vertex index, Hz row 3 cell + d = face at cell with normal d.
// xcube(L):         edges as toric3d. Hx row = cube with lower corner at the cell.
//                   Hz row 2 v + mu, mu in {x, y}: the four edges at v perpendicular to mu.
//                   The z-type vertex check is the product of the other two and is omitted.

namespace detail {

struct Torus3 {
    size_t L;
    size_t cell(size_t x, size_t y, size_t z) const {
        return L * L * (z % L) + L * (y % L) + (x % L);
    }
    size_t cell(std::array<size_t, 3> r) const {
        return cell(r[0], r[1], r[2]);
    }
    size_t edge(std::array<size_t, 3> r, size_t d) const {
        return 3 * cell(r) + d;
    }
    std::array<size_t, 3> coords(size_t c) const {
        return {c % L, (c / L) % L, c / (L * L)};
    }
    std::array<size_t, 3> shift(std::array<size_t, 3> r, size_t d, int delta) const {
        r[d] = (size_t)((long long)r[d] + (long long)L + delta) % L;
        return r;
    }
};

inline void set_ones(BitVector &row, std::initializer_list<size_t> qubits) {
    for (size_t q : qubits) {
        row.set(q, true);
    }
}

}  // namespace detail

inline CssCode toric2d(size_t L) {
    if (L < 2) {
        throw DimensionError("toric2d needs L >= 2");
    }
    size_t n = 2 * L * L;
    auto edge = [L](size_t x, size_t y, size_t o) { return 2 * (L * (y % L) + (x % L)) + o; };
    BitMatrix hx(n), hz(n);
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            BitVector v(n);
            detail::set_ones(v, {edge(x, y, 0), edge(x + L - 1, y, 0), edge(x, y, 1), edge(x, y + L - 1, 1)});
            hx.push_row(std::move(v));
        }
    }
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            BitVector p(n);
            detail::set_ones(p, {edge(x, y, 0), edge(x, y + 1, 0), edge(x, y, 1), edge(x + 1, y, 1)});
            hz.push_row(std::move(p));
        }
    }
    return CssCode(std::move(hz), std::move(hx));
}

inline CssCode surface2d(size_t lx, size_t ly) {
    if (lx < 2 || ly < 2) {
        throw DimensionError("surface2d needs Lx, Ly >= 2");
    }
    size_t n = lx * ly + (lx - 1) * (ly - 1);
    auto vert = [lx](size_t i, size_t j) { return lx * j + i; };
    auto horiz = [lx, ly](size_t i, size_t j) { return lx * ly + (lx - 1) * j + i; };
    BitMatrix hx(n), hz(n);
    for (size_t j = 0; j + 1 < ly; j++) {
        for (size_t i = 0; i < lx; i++) {
            BitVector v(n);
            v.set(vert(i, j), true);
            v.set(vert(i, j + 1), true);
            if (i >= 1) {
                v.set(horiz(i - 1, j), true);
            }
            if (i + 1 < lx) {
                v.set(horiz(i, j), true);
            }
            hx.push_row(std::move(v));
        }
    }
    for (size_t j = 0; j < ly; j++) {
        for (size_t i = 0; i + 1 < lx; i++) {
            BitVector p(n);
            p.set(vert(i, j), true);
            p.set(vert(i + 1, j), true);
            if (j >= 1) {
                p.set(horiz(i, j - 1), true);
            }
            if (j + 1 < ly) {
                p.set(horiz(i, j), true);
            }
            hz.push_row(std::move(p));
        }
    }
    return CssCode(std::move(hz), std::move(hx));
}

/// Face colors (0, 1, 2) of color666(lx, ly), indexed like the check rows.
inline std::vector<int> color666_face_colors(size_t lx, size_t ly) {
    std::vector<int> colors;
    for (size_t j = 0; j < ly; j++) {
        for (size_t i = 0; i < lx; i++) {
            colors.push_back((int)((i + 2 * j) % 3));
        }
    }
    return colors;
}

inline CssCode color666(size_t lx, size_t ly) {
    if (lx < 3 || ly < 3 || lx % 3 || ly % 3) {
        throw DimensionError("color666 needs Lx and Ly to be positive multiples of 3");
    }
    size_t n = 2 * lx * ly;
    auto site = [lx, ly](size_t i, size_t j, size_t sub) { return 2 * (lx * (j % ly) + (i % lx)) + sub; };
    BitMatrix faces(n);
    for (size_t j = 0; j < ly; j++) {
        for (size_t i = 0; i < lx; i++) {
            BitVector f(n);
            size_t im = i + lx - 1;
            detail::set_ones(
                f, {site(i, j, 0), site(i, j, 1), site(i, j + 1, 0), site(im, j + 1, 1), site(im, j + 1, 0),
                    site(im, j, 1)});
            faces.push_row(std::move(f));
        }
    }
    return CssCode(faces, faces);
}

inline CssCode toric3d(size_t L) {
    if (L < 2) {
        throw DimensionError("toric3d needs L >= 2");
    }
    detail::Torus3 t{L};
    size_t cells = L * L * L;
    size_t n = 3 * cells;
    BitMatrix hx(n), hz(n);
    for (size_t c = 0; c < cells; c++) {
        auto r = t.coords(c);
        BitVector v(n);
        for (size_t d = 0; d < 3; d++) {
            v.set(t.edge(r, d), true);
            v.set(t.edge(t.shift(r, d, -1), d), true);
        }
        hx.push_row(std::move(v));
    }
    for (size_t c = 0; c < cells; c++) {
        auto r = t.coords(c);
        for (size_t d = 0; d < 3; d++) {
            size_t a = (d + 1) % 3;
            size_t b = (d + 2) % 3;
            BitVector f(n);
            detail::set_ones(f, {t.edge(r, a), t.edge(t.shift(r, b, 1), a), t.edge(r, b), t.edge(t.shift(r, a, 1), b)});
            hz.push_row(std::move(f));
        }
    }
    return CssCode(std::move(hz), std::move(hx));
}

inline CssCode xcube(size_t L) {
    if (L < 2) {
        throw DimensionError("xcube needs L >= 2");
    }
    detail::Torus3 t{L};
    size_t cells = L * L * L;
    size_t n = 3 * cells;
    BitMatrix hx(n), hz(n);
    for (size_t c = 0; c < cells; c++) {
        auto r = t.coords(c);
        BitVector cube(n);
        for (size_t d = 0; d < 3; d++) {
            size_t a = (d + 1) % 3;
            size_t b = (d + 2) % 3;
            for (int s = 0; s < 2; s++) {
                for (int u = 0; u < 2; u++) {
                    cube.set(t.edge(t.shift(t.shift(r, a, s), b, u), d), true);
                }
            }
        }
        hx.push_row(std::move(cube));
    }
    for (size_t c = 0; c < cells; c++) {
        auto r = t.coords(c);
        for (size_t mu = 0; mu < 2; mu++) {
            BitVector v(n);
            for (size_t d = 0; d < 3; d++) {
                if (d == mu) {
                    continue;
                }
                v.set(t.edge(r, d), true);
                v.set(t.edge(t.shift(r, d, -1), d), true);
            }
            hz.push_row(std::move(v));
        }
    }
    return CssCode(std::move(hz), std::move(hx));
}

/// Hamming(7,4) parity check.
inline BitMatrix hamming7_checks() {
    return BitMatrix::from_strings({"1010101", "0110011", "0001111"});
}

/// [[7,1,3]].
inline CssCode steane() {
    return CssCode(hamming7_checks(), hamming7_checks());
}

/// [[4,2,2]].
inline CssCode four22() {
    return CssCode(BitMatrix::from_strings({"1111"}), BitMatrix::from_strings({"1111"}));
}

enum class Family { toric2d, surface2d, color666, toric3d, xcube, steane, four22 };

struct LatticeSpec {
    Family family;
    std::vector<size_t> dims;
};

namespace detail {

inline std::vector<size_t> parse_dims(std::string_view text) {
    std::vector<size_t> dims;
    size_t start = 0;
    while (true) {
        size_t end = text.find('x', start);
        std::string_view part = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (part.empty() || part.size() > 6) {
            throw ParseError(0, "bad lattice dimensions '" + std::string(text) + "'");
        }
        size_t v = 0;
        for (char c : part) {
            if (c < '0' || c > '9') {
                throw ParseError(0, "bad lattice dimensions '" + std::string(text) + "'");
            }
            v = v * 10 + (size_t)(c - '0');
        }
        dims.push_back(v);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return dims;
}

}  // namespace detail

/// Parses "family" or "family:dims", dims being "L" or "LxM".
inline LatticeSpec parse_lattice_spec(std::string_view text) {
    size_t colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::vector<size_t> dims;
    if (colon != std::string_view::npos) {
        dims = detail::parse_dims(text.substr(colon + 1));
    }
    auto want = [&](size_t lo, size_t hi) {
        if (dims.size() < lo || dims.size() > hi) {
            throw ParseError(0, "wrong number of dimensions for '" + std::string(name) + "'");
        }
    };
    if (name == "toric2d") {
        want(1, 1);
        return {Family::toric2d, dims};
    }
    if (name == "surface2d") {
        want(1, 2);
        if (dims.size() == 1) {
            dims.push_back(dims[0]);
        }
        return {Family::surface2d, dims};
    }
    if (name == "color666") {
        want(1, 2);
        if (dims.size() == 1) {
            dims.push_back(dims[0]);
        }
        return {Family::color666, dims};
    }
    if (name == "toric3d") {
        want(1, 1);
        return {Family::toric3d, dims};
    }
    if (name == "xcube") {
        want(1, 1);
        return {Family::xcube, dims};
    }
    if (name == "steane") {
        want(0, 0);
        return {Family::steane, dims};
    }
    if (name == "four22") {
        want(0, 0);
        return {Family::four22, dims};
    }
    throw ParseError(0, "unknown code family '" + std::string(name) + "'");
}

inline CssCode make_code(const LatticeSpec &spec) {
    switch (spec.family) {
        case Family::toric2d:
            return toric2d(spec.dims[0]);
        case Family::surface2d:
            return surface2d(spec.dims[0], spec.dims[1]);
        case Family::color666:
            return color666(spec.dims[0], spec.dims[1]);
        case Family::toric3d:
            return toric3d(spec.dims[0]);
        case Family::xcube:
            return xcube(spec.dims[0]);
        case Family::steane:
            return steane();
        case Family::four22:
            return four22();
    }
    throw InvariantViolation("unhandled code family");
}

}  // namespace cssmap

#endif
