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

#ifndef CSSMAP_SECTOR_DISTRIBUTION_H
#define CSSMAP_SECTOR_DISTRIBUTION_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cssmap/css_code.h"
#include "cssmap/error.h"

namespace cssmap {

enum class Field : uint8_t { a = 0, b = 1, kx = 2, kz = 3 };

/// Subset of {a, b, kx, kz} as a bitmask indexed by Field.
class FieldSet {
   public:
    constexpr FieldSet() = default;
    constexpr FieldSet(std::initializer_list<Field> fields) {
        for (Field f : fields) {
            mask_ |= (uint8_t)(1u << (unsigned)f);
        }
    }
    static constexpr FieldSet from_mask(uint8_t mask) {
        FieldSet s;
        s.mask_ = mask & 15;
        return s;
    }
    constexpr bool has(Field f) const {
        return (mask_ >> (unsigned)f) & 1;
    }
    constexpr uint8_t mask() const {
        return mask_;
    }
    constexpr bool contains(FieldSet other) const {
        return (other.mask_ & ~mask_) == 0;
    }
    constexpr FieldSet operator&(FieldSet o) const {
        return from_mask(mask_ & o.mask_);
    }
    constexpr bool operator==(const FieldSet &) const = default;

   private:
    uint8_t mask_ = 0;
};

inline constexpr FieldSet kSyndromeFields{Field::a, Field::b};
inline constexpr FieldSet kLogicalFields{Field::kx, Field::kz};
inline constexpr FieldSet kFactorizedX{Field::b, Field::kz};
inline constexpr FieldSet kFactorizedZ{Field::a, Field::kx};
inline constexpr FieldSet kJoint{Field::a, Field::b, Field::kx, Field::kz};

inline const char *field_name(Field f) {
    static const char *names[] = {"a", "b", "kx", "kz"};
    return names[(int)f];
}

enum class DistMode { factorized_x, factorized_z, joint, marginal };

/// Widths of the four sector fields for one code.
struct SectorWidths {
    std::array<size_t, 4> bits{};

    static SectorWidths of(const CssCode &code) {
        return {{code.rank_x(), code.rank_z(), code.k(), code.k()}};
    }
    size_t operator[](Field f) const {
        return bits[(size_t)f];
    }
    bool operator==(const SectorWidths &) const = default;
};

/// Bit placement of the present fields inside a packed sector index: fields
/// are concatenated in the order a, b, kx, kz, and bit i of that concatenation
/// is bit i of the index.
struct SectorLayout {
    SectorWidths widths;
    FieldSet fields;

    size_t width(Field f) const {
        return fields.has(f) ? widths[f] : 0;
    }
    size_t offset(Field f) const {
        size_t off = 0;
        for (size_t g = 0; g < (size_t)f; g++) {
            off += width((Field)g);
        }
        return off;
    }
    size_t total_width() const {
        return width(Field::a) + width(Field::b) + width(Field::kx) + width(Field::kz);
    }
    uint64_t extract(uint64_t index, Field f) const {
        size_t w = width(f);
        if (w == 0) {
            return 0;
        }
        return (index >> offset(f)) & ((w >= 64) ? ~uint64_t{0} : ((uint64_t{1} << w) - 1));
    }
    uint64_t place(uint64_t value, Field f) const {
        return width(f) ? value << offset(f) : 0;
    }
    /// Re-packs the fields of `index` (in this layout) that `target` keeps.
    uint64_t project(uint64_t index, const SectorLayout &target) const {
        uint64_t out = 0;
        for (size_t g = 0; g < 4; g++) {
            Field f = (Field)g;
            if (target.fields.has(f)) {
                out |= target.place(extract(index, f), f);
            }
        }
        return out;
    }
};

/// Exact probability table over packed sector labels.
///
/// The table is dense: entry i holds the probability of the sector whose
/// packed index (see SectorLayout) is i.
class SectorDistribution {
   public:
    SectorDistribution() = default;
    SectorDistribution(SectorLayout layout, size_t k, std::string code_hash)
        : layout_(layout), k_(k), code_hash_(std::move(code_hash)) {
        if (layout_.total_width() > 30) {
            throw TooLarge("sector table would need 2^" + std::to_string(layout_.total_width()) + " entries");
        }
        probs_.assign(size_t{1} << layout_.total_width(), 0.0);
    }

    const SectorLayout &layout() const {
        return layout_;
    }
    FieldSet fields() const {
        return layout_.fields;
    }
    size_t k() const {
        return k_;
    }
    const std::string &code_hash() const {
        return code_hash_;
    }
    size_t size() const {
        return probs_.size();
    }
    double operator[](uint64_t index) const {
        return probs_[index];
    }
    double &operator[](uint64_t index) {
        return probs_[index];
    }
    const std::vector<double> &probabilities() const {
        return probs_;
    }

    DistMode mode() const {
        if (layout_.fields == kFactorizedX) {
            return DistMode::factorized_x;
        }
        if (layout_.fields == kFactorizedZ) {
            return DistMode::factorized_z;
        }
        if (layout_.fields == kJoint) {
            return DistMode::joint;
        }
        return DistMode::marginal;
    }

    /// Noise parameters this table was computed for (provenance only).
    std::map<std::string, double> &noise() {
        return noise_;
    }
    const std::map<std::string, double> &noise() const {
        return noise_;
    }

    uint64_t pack(const SectorKey &key) const {
        uint64_t out = 0;
        const BitVector *parts[] = {&key.a, &key.b, &key.kx, &key.kz};
        for (size_t g = 0; g < 4; g++) {
            Field f = (Field)g;
            if (!layout_.fields.has(f)) {
                continue;
            }
            if (parts[g]->size() != layout_.widths[f]) {
                throw DimensionError(std::string("sector field ") + field_name(f) + " has the wrong width");
            }
            out |= layout_.place(parts[g]->to_uint(), f);
        }
        return out;
    }

    /// Fields absent from the layout come back empty.
    SectorKey unpack(uint64_t index) const {
        SectorKey key;
        BitVector *parts[] = {&key.a, &key.b, &key.kx, &key.kz};
        for (size_t g = 0; g < 4; g++) {
            Field f = (Field)g;
            size_t w = layout_.width(f);
            *parts[g] = BitVector::from_uint(layout_.extract(index, f), w);
        }
        return key;
    }

    double at(const SectorKey &key) const {
        return probs_[pack(key)];
    }

    double total() const {
        double s = 0;
        for (double p : probs_) {
            s += p;
        }
        return s;
    }

   private:
    SectorLayout layout_;
    size_t k_ = 0;
    std::string code_hash_;
    std::vector<double> probs_;
    std::map<std::string, double> noise_;
};

/// Sums out every field not in `keep`. Summation runs in increasing source
/// index order.
inline SectorDistribution marginalize(const SectorDistribution &dist, FieldSet keep) {
    if (!dist.fields().contains(keep)) {
        throw DimensionError("marginalize: kept fields must be present in the distribution");
    }
    SectorLayout target{dist.layout().widths, keep};
    SectorDistribution out(target, dist.k(), dist.code_hash());
    out.noise() = dist.noise();
    for (uint64_t i = 0; i < dist.size(); i++) {
        out[dist.layout().project(i, target)] += dist[i];
    }
    return out;
}

/// Hex form of a packed index: the concatenated field bits read as an
/// unsigned integer (bit 0 least significant), ceil(width / 4) digits,
/// most significant digit first. Width 0 gives the empty string.
inline std::string sector_hex(uint64_t index, size_t width) {
    static const char *digits = "0123456789abcdef";
    size_t len = (width + 3) / 4;
    std::string out(len, '0');
    for (size_t i = 0; i < len; i++) {
        out[len - 1 - i] = digits[(index >> (4 * i)) & 15];
    }
    return out;
}

inline uint64_t parse_sector_hex(const std::string &text, size_t width) {
    if (text.size() != (width + 3) / 4) {
        throw ParseError(0, "sector key '" + text + "' has the wrong length");
    }
    uint64_t v = 0;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else {
            throw ParseError(0, "sector key '" + text + "' is not lowercase hex");
        }
        v = (v << 4) | (uint64_t)d;
    }
    if (width < 64 && (v >> width)) {
        throw ParseError(0, "sector key '" + text + "' sets bits beyond the field width");
    }
    return v;
}

}  // namespace cssmap

#endif
