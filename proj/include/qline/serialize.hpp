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

// JSON encodings. Keys are emitted in a fixed order and vector lists are
// lexicographic, so equal values always serialise to identical bytes.

#pragma once

#include <nlohmann/json.hpp>

#include "qline/pauli.hpp"
#include "qline/projline.hpp"
#include "qline/ring_core.hpp"
#include "qline/symplectic.hpp"

namespace qline {

using json = nlohmann::ordered_json;

inline json to_json(const Vector2 &v) {
    return json::array({v.b, v.c});
}

inline json to_json(const VectorSet &set) {
    json out = json::array();
    for (const auto &v : set) {
        out.push_back(to_json(v));
    }
    return out;
}

inline json to_json(const Modulus &m) {
    json factors = json::array();
    for (const auto &f : m.factors()) {
        factors.push_back(json::array({f.prime, f.multiplicity}));
    }
    json out;
    out["d"] = m.d();
    out["factors"] = std::move(factors);
    out["square_free"] = m.square_free();
    out["idempotents"] = m.idempotents();
    return out;
}

inline json to_json(const PerpSet &perp) {
    json out;
    out["base"] = to_json(perp.base);
    out["members"] = to_json(perp.members);
    out["size"] = perp.size();
    return out;
}

inline json to_json(const Point &p) {
    json out;
    out["generator"] = to_json(p.generator);
    out["members"] = to_json(p.members);
    return out;
}

inline json to_json(const PauliOp &w, const Modulus &m) {
    json out;
    out["a"] = w.a;
    out["b"] = w.b;
    out["c"] = w.c;
    out["d"] = m.d();
    return out;
}

inline json to_json(const NeighbourGraph &g) {
    json vertices = json::array();
    for (const auto &p : g.vertices) {
        vertices.push_back(to_json(p.generator));
    }
    json edges = json::array();
    for (const auto &[i, j] : g.edges) {
        edges.push_back(json::array({i, j}));
    }
    json out;
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

}  // namespace qline
