// Copyright 2026 The qline Authors
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

#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "qline/ring_core.hpp"

namespace qline {

/// A row vector (b, c) of Z_d^2. Ordering is lexicographic on (b, c).
struct Vector2 {
    Int b = 0;
    Int c = 0;
    friend auto operator<=>(const Vector2 &, const Vector2 &) = default;
};

/// Sorted, duplicate-free list of vectors.
using VectorSet = std::vector<Vector2>;

inline Vector2 make_vector(Int b, Int c, const Modulus &m) {
    return {m.reduce(b), m.reduce(c)};
}

inline Vector2 add(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return {m.add(v.b, w.b), m.add(v.c, w.c)};
}

inline Vector2 scale(Int u, const Vector2 &v, const Modulus &m) {
    return {m.mul(u, v.b), m.mul(u, v.c)};
}

inline bool is_zero(const Vector2 &v) {
    return v.b == 0 && v.c == 0;
}

inline bool contains(const VectorSet &set, const Vector2 &v) {
    return std::binary_search(set.begin(), set.end(), v);
}

/// All d^2 vectors in lexicographic order.
inline VectorSet all_vectors(const Modulus &m) {
    VectorSet out;
    out.reserve(static_cast<std::size_t>(m.d() * m.d()));
    for (Int b = 0; b < m.d(); ++b) {
        for (Int c = 0; c < m.d(); ++c) {
            out.push_back({b, c});
        }
    }
    return out;
}

/// The alternating form [v, w] = v.c * w.b - w.c * v.b, i.e. the exponent of
/// omega in the group commutator of X^{v.b} Z^{v.c} and X^{w.b} Z^{w.c}.
inline Int form(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return m.sub(m.mul(v.c, w.b), m.mul(w.c, v.b));
}

/// Signature shared by form() and the substitute forms the oracle tests inject.
using FormFn = Int (*)(const Vector2 &, const Vector2 &, const Modulus &);

inline bool is_perp(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return form(v, w, m) == 0;
}

struct PerpSet {
    Vector2 base;
    VectorSet members;

    std::size_t size() const {
        return members.size();
    }
    bool contains(const Vector2 &v) const {
        return qline::contains(members, v);
    }
};

/// Enumerates all d^2 vectors and keeps those orthogonal to v under `f`.
inline PerpSet perp_set(const Vector2 &v, const Modulus &m, FormFn f) {
    PerpSet out{v, {}};
    for (Int b = 0; b < m.d(); ++b) {
        for (Int c = 0; c < m.d(); ++c) {
            Vector2 w{b, c};
            if (f(v, w, m) == 0) {
                out.members.push_back(w);
            }
        }
    }
    return out;
}

inline PerpSet perp_set(const Vector2 &v, const Modulus &m) {
    return perp_set(v, m, &form);
}

}  // namespace qline
