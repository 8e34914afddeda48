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

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qline/projline.hpp"
#include "qline/ring_core.hpp"
#include "qline/symplectic.hpp"

namespace qline {

/// The operator w^a X^b Z^c in normal form, stored by its exponents.
struct PauliOp {
    Int a = 0;
    Int b = 0;
    Int c = 0;
    friend auto operator<=>(const PauliOp &, const PauliOp &) = default;
};

inline PauliOp make_op(Int a, Int b, Int c, const Modulus &m) {
    return {m.reduce(a), m.reduce(b), m.reduce(c)};
}

inline constexpr PauliOp identity_op{0, 0, 0};
inline constexpr PauliOp shift_op{0, 1, 0};
inline constexpr PauliOp clock_op{0, 0, 1};

/// The coset of w modulo the centre, as a vector (b, c).
inline Vector2 coset(const PauliOp &w) {
    return {w.b, w.c};
}

/// (w^a X^b Z^c)(w^a' X^b' Z^c') = w^(b'c + a + a') X^(b+b') Z^(c+c').
inline PauliOp multiply(const PauliOp &w, const PauliOp &w2, const Modulus &m) {
    return {m.reduce(w2.b * w.c + w.a + w2.a), m.add(w.b, w2.b), m.add(w.c, w2.c)};
}

/// Closed form: (a, b, c)^{-1} = (bc - a, -b, -c).
inline PauliOp inverse(const PauliOp &w, const Modulus &m) {
    return {m.sub(m.mul(w.b, w.c), w.a), m.neg(w.b), m.neg(w.c)};
}

/// [W, W'] = w^(cb' - c'b) I.
inline PauliOp commutator(const PauliOp &w, const PauliOp &w2, const Modulus &m) {
    return {form(coset(w), coset(w2), m), 0, 0};
}

/// W W' W^{-1} W'^{-1}, evaluated with multiply().
inline PauliOp commutator_by_product(const PauliOp &w, const PauliOp &w2, const Modulus &m) {
    auto left = multiply(w, w2, m);
    auto right = multiply(inverse(w, m), inverse(w2, m), m);
    return multiply(left, right, m);
}

inline bool commutes(const PauliOp &w, const PauliOp &w2, const Modulus &m) {
    return form(coset(w), coset(w2), m) == 0;
}

/// The scalars w^a I, a in Z_d.
inline std::vector<PauliOp> centre(const Modulus &m) {
    std::vector<PauliOp> out;
    for (Int a = 0; a < m.d(); ++a) {
        out.push_back({a, 0, 0});
    }
    return out;
}

/// All d^3 operators, ordered by (a, b, c).
inline std::vector<PauliOp> all_operators(const Modulus &m) {
    std::vector<PauliOp> out;
    out.reserve(static_cast<std::size_t>(m.d() * m.d() * m.d()));
    for (Int a = 0; a < m.d(); ++a) {
        for (Int b = 0; b < m.d(); ++b) {
            for (Int c = 0; c < m.d(); ++c) {
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

/// Number of operators commuting with w: d * |(b, c)^perp| (square-free d).
inline Int commuting_count(const PauliOp &w, const Modulus &m) {
    m.require_square_free("commuting_count");
    return m.d() * perp_size_formula(coset(w), m);
}

/// Exhaustive count over all d^3 operators.
inline Int commuting_count_brute(const PauliOp &w, const Modulus &m) {
    Int n = 0;
    for (Int a = 0; a < m.d(); ++a) {
        for (Int b = 0; b < m.d(); ++b) {
            for (Int c = 0; c < m.d(); ++c) {
                n += commutes(w, {a, b, c}, m);
            }
        }
    }
    return n;
}

/// "w^a X^b Z^c" with factors of exponent 0 dropped and exponent 1 written bare.
inline std::string pretty_op(const PauliOp &w) {
    std::string out;
    auto factor = [&out](const char *symbol, Int e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += symbol;
        if (e != 1) {
            out += '^' + std::to_string(e);
        }
    };
    factor("w", w.a);
    factor("X", w.b);
    factor("Z", w.c);
    return out.empty() ? "I" : out;
}

/// Exact d x d generalized permutation matrix: column s has a single non-zero
/// entry w^expo[s] in row perm[s].
struct GenPermMatrix {
    Int dim = 0;
    std::vector<Int> perm;
    std::vector<Int> expo;

    bool operator==(const GenPermMatrix &) const = default;

    static GenPermMatrix identity(Int d) {
        GenPermMatrix out{d, std::vector<Int>(static_cast<std::size_t>(d)), std::vector<Int>(static_cast<std::size_t>(d), 0)};
        for (Int s = 0; s < d; ++s) {
            out.perm[static_cast<std::size_t>(s)] = s;
        }
        return out;
    }

    /// X|s> = |s+1>.
    static GenPermMatrix shift(Int d) {
        auto out = identity(d);
        for (Int s = 0; s < d; ++s) {
            out.perm[static_cast<std::size_t>(s)] = (s + 1) % d;
        }
        return out;
    }

    /// Z|s> = w^s |s>.
    static GenPermMatrix clock(Int d) {
        auto out = identity(d);
        for (Int s = 0; s < d; ++s) {
            out.expo[static_cast<std::size_t>(s)] = s;
        }
        return out;
    }

    /// Entry (row, col) as an omega exponent, or -1 for a structural zero.
    Int entry(Int row, Int col) const {
        auto s = static_cast<std::size_t>(col);
        return perm[s] == row ? expo[s] : -1;
    }
};

inline GenPermMatrix operator*(const GenPermMatrix &lhs, const GenPermMatrix &rhs) {
    if (lhs.dim != rhs.dim) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    GenPermMatrix out{lhs.dim, std::vector<Int>(rhs.perm.size()), std::vector<Int>(rhs.perm.size())};
    for (std::size_t s = 0; s < rhs.perm.size(); ++s) {
        auto mid = static_cast<std::size_t>(rhs.perm[s]);
        out.perm[s] = lhs.perm[mid];
        out.expo[s] = (lhs.expo[mid] + rhs.expo[s]) % lhs.dim;
    }
    return out;
}

struct GenPermMatrixHash {
    std::size_t operator()(const GenPermMatrix &mat) const noexcept {
        std::size_t h = 0;
        for (std::size_t s = 0; s < mat.perm.size(); ++s) {
            h = h * 1000003u ^ static_cast<std::size_t>(mat.perm[s] * mat.dim + mat.expo[s]);
        }
        return h;
    }
};

/// w^a X^b Z^c sends column s to row s + b with exponent a + c*s.
inline GenPermMatrix to_matrix(const PauliOp &w, const Modulus &m) {
    const Int d = m.d();
    GenPermMatrix out{d, std::vector<Int>(static_cast<std::size_t>(d)), std::vector<Int>(static_cast<std::size_t>(d))};
    for (Int s = 0; s < d; ++s) {
        out.perm[static_cast<std::size_t>(s)] = m.add(s, w.b);
        out.expo[static_cast<std::size_t>(s)] = m.reduce(w.a + w.c * s);
    }
    return out;
}

inline constexpr Int max_closure_modulus = 32;

/// The subgroup generated by the shift and clock matrices, by breadth-first closure.
inline std::unordered_set<GenPermMatrix, GenPermMatrixHash> group_closure(const Modulus &m) {
    if (m.d() > max_closure_modulus) {
        throw std::invalid_argument(
            "group closure is limited to d <= " + std::to_string(max_closure_modulus) + ", got d = " +
            std::to_string(m.d()));
    }
    const std::vector<GenPermMatrix> generators{GenPermMatrix::shift(m.d()), GenPermMatrix::clock(m.d())};
    std::unordered_set<GenPermMatrix, GenPermMatrixHash> seen;
    std::vector<GenPermMatrix> frontier{GenPermMatrix::identity(m.d())};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<GenPermMatrix> next;
        for (const auto &g : frontier) {
            for (const auto &gen : generators) {
                auto h = g * gen;
                if (seen.insert(h).second) {
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

inline Int group_closure_order(const Modulus &m) {
    return static_cast<Int>(group_closure(m).size());
}

/// True iff the d^3 normal forms map to pairwise distinct matrices.
inline bool normal_forms_distinct(const Modulus &m) {
    std::unordered_set<GenPermMatrix, GenPermMatrixHash> seen;
    for (const auto &w : all_operators(m)) {
        if (!seen.insert(to_matrix(w, m)).second) {
            return false;
        }
    }
    return true;
}

}  // namespace qline
