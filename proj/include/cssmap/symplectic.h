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

#ifndef CSSMAP_SYMPLECTIC_H
#define CSSMAP_SYMPLECTIC_H

#include <algorithm>
#include <utility>
#include <vector>

#include "cssmap/bit_vector.h"

namespace cssmap {

/// Pauli operator in binary symplectic form, phases dropped.
struct SymplecticOp {
    BitVector z_part;
    BitVector x_part;

    static SymplecticOp z_type(BitVector support) {
        BitVector zero(support.size());
        return {std::move(support), std::move(zero)};
    }
    static SymplecticOp x_type(BitVector support) {
        BitVector zero(support.size());
        return {std::move(zero), std::move(support)};
    }

    bool is_z_type() const {
        return x_part.is_zero();
    }
    bool is_x_type() const {
        return z_part.is_zero();
    }

    SymplecticOp &operator*=(const SymplecticOp &other) {
        z_part ^= other.z_part;
        x_part ^= other.x_part;
        return *this;
    }

    bool operator==(const SymplecticOp &other) const = default;
};

/// 1 if the operators anticommute, 0 if they commute.
inline bool anticommutes(const SymplecticOp &a, const SymplecticOp &b) {
    return dot(a.z_part, b.x_part) ^ dot(a.x_part, b.z_part);
}

struct SgsopResult {
    std::vector<std::pair<SymplecticOp, SymplecticOp>> pairs;
    std::vector<SymplecticOp> commuting;
};

/// Symplectic Gram-Schmidt orthogonalization.
///
/// Repeatedly takes the first remaining operator g1. If it commutes with all
/// others it is set aside. Otherwise the first operator g2 anticommuting with
/// it becomes its partner and every other operator is replaced by
/// g * g1^f(g, g2) * g2^f(g, g1), which commutes with both. Each returned pair
/// anticommutes internally and commutes with every other returned operator.
inline SgsopResult sgsop(std::vector<SymplecticOp> ops) {
    SgsopResult out;
    size_t head = 0;
    while (head < ops.size()) {
        size_t partner = head + 1;
        while (partner < ops.size() && !anticommutes(ops[head], ops[partner])) {
            partner++;
        }
        if (partner == ops.size()) {
            out.commuting.push_back(std::move(ops[head]));
            head++;
            continue;
        }
        // Move the partner next to g1; the rest keep their relative order.
        std::rotate(ops.begin() + head + 1, ops.begin() + partner, ops.begin() + partner + 1);
        const SymplecticOp &g1 = ops[head];
        const SymplecticOp &g2 = ops[head + 1];
        for (size_t i = head + 2; i < ops.size(); i++) {
            bool f_g2 = anticommutes(ops[i], g2);
            bool f_g1 = anticommutes(ops[i], g1);
            if (f_g2) {
                ops[i] *= g1;
            }
            if (f_g1) {
                ops[i] *= g2;
            }
        }
        out.pairs.emplace_back(std::move(ops[head]), std::move(ops[head + 1]));
        head += 2;
    }
    return out;
}

}  // namespace cssmap

#endif
