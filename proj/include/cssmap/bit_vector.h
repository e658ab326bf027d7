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

#ifndef CSSMAP_BIT_VECTOR_H
#define CSSMAP_BIT_VECTOR_H

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cssmap/error.h"

namespace cssmap {

/// A vector over F2 packed into 64-bit words.
///
/// Bit i lives in word i / 64 at position i % 64 (little-endian within a
/// word). Padding bits past `size()` are zero after every mutation, so word
/// level equality, popcount and XOR need no masking.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t len) : len_(len), words_((len + 63) / 64, 0) {
    }

    /// Parses a string of '0'/'1' characters, bit 0 first.
    static BitVector from_string(std::string_view text) {
        BitVector v(text.size());
        for (size_t i = 0; i < text.size(); i++) {
            if (text[i] == '1') {
                v.set(i, true);
            } else if (text[i] != '0') {
                throw DimensionError("bit string contains a character other than 0 or 1");
            }
        }
        return v;
    }

    /// Low `len` bits of `bits`, bit 0 = least significant.
    static BitVector from_uint(uint64_t bits, size_t len) {
        BitVector v(len);
        for (size_t i = 0; i < len && i < 64; i++) {
            v.set(i, (bits >> i) & 1);
        }
        return v;
    }

    size_t size() const {
        return len_;
    }
    size_t num_words() const {
        return words_.size();
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool operator[](size_t i) const {
        return get(i);
    }
    void set(size_t i, bool value) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    size_t weight() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += (size_t)std::popcount(w);
        }
        return total;
    }
    bool is_zero() const {
        for (uint64_t w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    /// Index of the first set bit, or size() if none.
    size_t first_one() const {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k]) {
                return k * 64 + (size_t)std::countr_zero(words_[k]);
            }
        }
        return len_;
    }

    BitVector &operator^=(const BitVector &other) {
        require_same_size(other);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    BitVector &operator&=(const BitVector &other) {
        require_same_size(other);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] &= other.words_[k];
        }
        return *this;
    }
    BitVector &operator|=(const BitVector &other) {
        require_same_size(other);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] |= other.words_[k];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        a |= b;
        return a;
    }

    bool operator==(const BitVector &other) const = default;

    /// Lexicographic on (size, words from the high end). Only for use as a map key.
    bool operator<(const BitVector &other) const {
        if (len_ != other.len_) {
            return len_ < other.len_;
        }
        for (size_t k = words_.size(); k-- > 0;) {
            if (words_[k] != other.words_[k]) {
                return words_[k] < other.words_[k];
            }
        }
        return false;
    }

    /// Low 64 bits as an integer, bit 0 = least significant.
    uint64_t to_uint() const {
        return words_.empty() ? 0 : words_[0];
    }

    std::string str() const {
        std::string out(len_, '0');
        for (size_t i = 0; i < len_; i++) {
            if (get(i)) {
                out[i] = '1';
            }
        }
        return out;
    }

   private:
    void require_same_size(const BitVector &other) const {
        if (other.len_ != len_) {
            throw DimensionError(
                "bit vector length mismatch: " + std::to_string(len_) + " vs " + std::to_string(other.len_));
        }
    }

    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Inner product over F2.
inline bool dot(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch");
    }
    auto wa = a.words();
    auto wb = b.words();
    uint64_t acc = 0;
    for (size_t k = 0; k < wa.size(); k++) {
        acc ^= wa[k] & wb[k];
    }
    return std::popcount(acc) & 1;
}

}  // namespace cssmap

#endif
