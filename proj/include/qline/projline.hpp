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
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qline/ring_core.hpp"
#include "qline/symplectic.hpp"

namespace qline {

/// (b, c) is admissible iff it is unimodular, i.e. gcd(b, c, d) == 1.
inline bool is_admissible(const Vector2 &v, const Modulus &m) {
    return std::gcd(std::gcd(m.reduce(v.b), m.reduce(v.c)), m.d()) == 1;
}

/// Square-free criterion: no CRT component of v is the zero pair.
inline bool is_admissible_by_components(const Vector2 &v, const Modulus &m) {
    m.require_square_free("is_admissible_by_components");
    for (std::size_t k = 0; k < m.rank(); ++k) {
        if (component(v.b, k, m) == 0 && component(v.c, k, m) == 0) {
            return false;
        }
    }
    return true;
}

/// Z_d * v, sorted. Its size divides d and equals d exactly when v is admissible.
inline VectorSet cyclic_submodule(const Vector2 &v, const Modulus &m) {
    VectorSet out;
    out.reserve(static_cast<std::size_t>(m.d()));
    for (Int u = 0; u < m.d(); ++u) {
        out.push_back(scale(u, v, m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// A point of the projective line: a free cyclic submodule of Z_d^2.
///
/// `generator` is the lexicographically smallest admissible member. Two points
/// are equal iff their member sets are equal.
struct Point {
    Vector2 generator;
    VectorSet members;

    bool contains(const Vector2 &v) const {
        return qline::contains(members, v);
    }
    bool operator==(const Point &other) const {
        return members == other.members;
    }
};

/// The point Z_d * v for an admissible v.
inline Point point_through(const Vector2 &v, const Modulus &m) {
    if (!is_admissible(v, m)) {
        throw std::invalid_argument(
            "(" + std::to_string(v.b) + "," + std::to_string(v.c) + ") is not admissible mod " +
            std::to_string(m.d()));
    }
    Point p{v, cyclic_submodule(v, m)};
    for (const auto &w : p.members) {
        if (is_admissible(w, m)) {
            p.generator = w;
            break;
        }
    }
    return p;
}

/// All points, ordered by canonical generator.
inline std::vector<Point> enumerate_points(const Modulus &m) {
    const Int d = m.d();
    std::vector<bool> covered(static_cast<std::size_t>(d * d), false);
    std::vector<Point> out;
    for (Int b = 0; b < d; ++b) {
        for (Int c = 0; c < d; ++c) {
            Vector2 v{b, c};
            if (covered[static_cast<std::size_t>(b * d + c)] || !is_admissible(v, m)) {
                continue;
            }
            // v is the first admissible vector of its point, so it is already canonical.
            Point p{v, cyclic_submodule(v, m)};
            for (const auto &w : p.members) {
                covered[static_cast<std::size_t>(w.b * d + w.c)] = true;
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Product of (p_k + 1) over all primes of a square-free d.
inline Int point_count_formula(const Modulus &m) {
    m.require_square_free("point_count_formula");
    Int n = 1;
    for (const auto &f : m.factors()) {
        n *= f.prime + 1;
    }
    return n;
}

/// Indices k (0-based) at which both components of v vanish. Empty iff v is admissible.
inline std::vector<std::size_t> index_set_K(const Vector2 &v, const Modulus &m) {
    m.require_square_free("index_set_K");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < m.rank(); ++k) {
        if (component(v.b, k, m) == 0 && component(v.c, k, m) == 0) {
            out.push_back(k);
        }
    }
    return out;
}

/// Number of points through v: product of (p_k + 1) over k in K.
inline Int points_through_formula(const Vector2 &v, const Modulus &m) {
    m.require_square_free("points_through_formula");
    Int n = 1;
    for (auto k : index_set_K(v, m)) {
        n *= m.prime(k) + 1;
    }
    return n;
}

/// |v^perp| = d * product of p_k over k in K.
inline Int perp_size_formula(const Vector2 &v, const Modulus &m) {
    m.require_square_free("perp_size_formula");
    Int n = m.d();
    for (auto k : index_set_K(v, m)) {
        n *= m.prime(k);
    }
    return n;
}

/// Points of `line` that contain v. `line` must be enumerate_points(m).
inline std::vector<Point> points_containing(const Vector2 &v, std::span<const Point> line, const Modulus &m) {
    m.require_square_free("points_containing");
    std::vector<Point> out;
    for (const auto &p : line) {
        if (p.contains(v)) {
            out.push_back(p);
        }
    }
    return out;
}

inline std::vector<Point> points_containing(const Vector2 &v, const Modulus &m) {
    auto line = enumerate_points(m);
    return points_containing(v, line, m);
}

/// Union of the member sets of all points through v; equals v^perp for square-free d.
inline VectorSet perp_as_point_union(const Vector2 &v, std::span<const Point> line, const Modulus &m) {
    m.require_square_free("perp_as_point_union");
    VectorSet out;
    for (const auto &p : line) {
        if (p.contains(v)) {
            out.insert(out.end(), p.members.begin(), p.members.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline VectorSet perp_as_point_union(const Vector2 &v, const Modulus &m) {
    auto line = enumerate_points(m);
    return perp_as_point_union(v, line, m);
}

/// Distant iff the generators form a basis, i.e. their determinant is a unit.
inline bool is_distant(const Point &p, const Point &q, const Modulus &m) {
    return is_unit(form(p.generator, q.generator, m), m);
}

struct NeighbourGraph {
    std::vector<Point> vertices;
    /// Pairs (i, j) with i < j, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t degree(std::size_t i) const {
        std::size_t n = 0;
        for (const auto &[a, b] : edges) {
            n += (a == i) + (b == i);
        }
        return n;
    }
};

/// Vertices are the points; an edge joins two distinct neighbouring points.
inline NeighbourGraph neighbour_graph(const Modulus &m) {
    NeighbourGraph g{enumerate_points(m), {}};
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            if (!is_distant(g.vertices[i], g.vertices[j], m)) {
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

inline std::string point_label(const Point &p, const Modulus &m) {
    return "Z" + std::to_string(m.d()) + "(" + std::to_string(p.generator.b) + "," +
           std::to_string(p.generator.c) + ")";
}

inline std::string to_dot(const NeighbourGraph &g, const Modulus &m) {
    std::string out = "graph P1_Z" + std::to_string(m.d()) + " {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out += "  " + std::to_string(i) + " [label=\"" + point_label(g.vertices[i], m) + "\"];\n";
    }
    for (const auto &[a, b] : g.edges) {
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace qline
