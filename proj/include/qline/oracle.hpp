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

// Exhaustive verification of the geometric and group-theoretic statements the
// library relies on. Each check enumerates its whole state space for the given
// modulus and reports the first counterexample it meets.

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qline/pauli.hpp"
#include "qline/projline.hpp"
#include "qline/ring_core.hpp"
#include "qline/serialize.hpp"
#include "qline/symplectic.hpp"

namespace qline {

enum class Outcome { pass, fail, skipped };

inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::pass:
            return "pass";
        case Outcome::fail:
            return "fail";
        case Outcome::skipped:
            return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    std::string scope;
    Outcome outcome = Outcome::pass;
    /// Present iff outcome == fail.
    std::optional<json> counterexample;
    /// Why a check was skipped; empty otherwise.
    std::string reason;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const {
        return outcome == Outcome::pass;
    }
};

struct VerificationReport {
    Int d = 0;
    std::vector<CheckResult> checks;

    /// No check failed. Skipped checks are reported but are not failures.
    bool all_passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const auto &c) { return c.outcome == Outcome::fail; });
    }
};

/// Substitution points for the harness's own mutation tests.
struct OracleHooks {
    FormFn form = &qline::form;
};

inline constexpr Int max_theorem_modulus = 105;
inline constexpr Int max_admissibility_modulus = 30;
/// Above this bound operator-pair checks use phase-free coset representatives.
inline constexpr Int max_all_pairs_modulus = 10;
/// Above this bound the commutant count visits each coset once instead of every operator.
inline constexpr Int max_full_commutant_modulus = 15;

namespace detail {

template <class Body>
CheckResult run_check(std::string name, Body &&body) {
    auto start = std::chrono::steady_clock::now();
    CheckResult out{std::move(name), {}, Outcome::pass, std::nullopt, {}, {}};
    std::optional<json> failure = body(out.scope);
    out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    if (failure) {
        out.outcome = Outcome::fail;
        out.counterexample = std::move(failure);
    }
    return out;
}

inline CheckResult skipped(std::string name, std::string reason) {
    CheckResult out;
    out.name = std::move(name);
    out.outcome = Outcome::skipped;
    out.reason = std::move(reason);
    return out;
}

inline void require_at_most(Int d, Int bound, std::string_view check) {
    if (d > bound) {
        throw std::invalid_argument(
            std::string(check) + " is limited to d <= " + std::to_string(bound) + ", got d = " + std::to_string(d));
    }
}

inline json claim(std::string_view what) {
    json out;
    out["claim"] = what;
    return out;
}

inline Int field_inverse(Int x, Int p) {
    auto eg = extended_gcd(x, p);
    return ((eg.x % p) + p) % p;
}

}  // namespace detail

/// A generator through both v and w (w orthogonal to v), built component by
/// component, together with scalars u, s with u*generator == v and
/// s*generator == w.
struct Witness {
    Vector2 generator;
    Int u = 0;
    Int s = 0;
    /// True if some k in K had a zero component of w, forcing the pair (1, 1).
    bool fallback_used = false;
};

/// Off K the generator copies v's components; on K it copies w's components
/// when non-zero and (1, 1) otherwise. Requires square-free d.
inline Witness witness_for(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    m.require_square_free("witness_for");
    const std::size_t r = m.rank();
    std::vector<Int> gb(r), gc(r), u(r), s(r);
    Witness out;
    for (std::size_t k = 0; k < r; ++k) {
        const Int p = m.prime(k);
        const Int vb = component(v.b, k, m), vc = component(v.c, k, m);
        const Int wb = component(w.b, k, m), wc = component(w.c, k, m);
        if (vb != 0 || vc != 0) {
            gb[k] = vb;
            gc[k] = vc;
            u[k] = 1;
            // (wb, wc) = s * (vb, vc) over the field Z_p, since the determinant vanishes.
            s[k] = vb != 0 ? wb * detail::field_inverse(vb, p) % p : wc * detail::field_inverse(vc, p) % p;
        } else if (wb != 0 || wc != 0) {
            gb[k] = wb;
            gc[k] = wc;
            u[k] = 0;
            s[k] = 1;
        } else {
            gb[k] = 1;
            gc[k] = 1;
            u[k] = 0;
            s[k] = 0;
            out.fallback_used = true;
        }
    }
    out.generator = {from_components(gb, m), from_components(gc, m)};
    out.u = from_components(u, m);
    out.s = from_components(s, m);
    return out;
}

/// Every point through v lies in v^perp; for admissible v, v^perp is the single point Z_d v.
inline CheckResult verify_theorem1(const Modulus &m, const OracleHooks &hooks = {}) {
    detail::require_at_most(m.d(), max_theorem_modulus, "theorem1");
    return detail::run_check("theorem1", [&](std::string &scope) -> std::optional<json> {
        const auto line = enumerate_points(m);
        scope = "all " + std::to_string(m.d() * m.d()) + " vectors against " + std::to_string(line.size()) + " points";
        for (const auto &v : all_vectors(m)) {
            const auto perp = perp_set(v, m, hooks.form);
            for (const auto &p : line) {
                if (!p.contains(v)) {
                    continue;
                }
                if (!std::includes(perp.members.begin(), perp.members.end(), p.members.begin(), p.members.end())) {
                    auto ce = detail::claim("point through v is a subset of v^perp");
                    ce["v"] = to_json(v);
                    ce["point"] = to_json(p);
                    ce["perp"] = to_json(perp.members);
                    return ce;
                }
                if (is_admissible(v, m) && p.members != perp.members) {
                    auto ce = detail::claim("for admissible v, every point through v equals v^perp");
                    ce["v"] = to_json(v);
                    ce["point"] = to_json(p);
                    ce["perp"] = to_json(perp.members);
                    return ce;
                }
            }
            if (is_admissible(v, m) && perp.members != cyclic_submodule(v, m)) {
                auto ce = detail::claim("for admissible v, v^perp equals Z_d v");
                ce["v"] = to_json(v);
                ce["perp"] = to_json(perp.members);
                ce["submodule"] = to_json(cyclic_submodule(v, m));
                return ce;
            }
        }
        return std::nullopt;
    });
}

/// Point count through v, perp-set as union of those points, and perp-set size.
inline CheckResult verify_theorem2(const Modulus &m, const OracleHooks &hooks = {}) {
    m.require_square_free("theorem2");
    detail::require_at_most(m.d(), max_theorem_modulus, "theorem2");
    return detail::run_check("theorem2", [&](std::string &scope) -> std::optional<json> {
        const auto line = enumerate_points(m);
        scope = "all " + std::to_string(m.d() * m.d()) + " vectors, claims (a) (b) (c)";
        for (const auto &v : all_vectors(m)) {
            const auto perp = perp_set(v, m, hooks.form);
            const auto through = points_containing(v, line, m);
            const auto predicted_points = points_through_formula(v, m);
            if (static_cast<Int>(through.size()) != predicted_points) {
                auto ce = detail::claim("(a) number of points through v");
                ce["v"] = to_json(v);
                ce["expected"] = predicted_points;
                ce["found"] = through.size();
                return ce;
            }
            const auto united = perp_as_point_union(v, line, m);
            if (united != perp.members) {
                auto ce = detail::claim("(b) union of points through v equals v^perp");
                ce["v"] = to_json(v);
                ce["union"] = to_json(united);
                ce["perp"] = to_json(perp.members);
                return ce;
            }
            const auto predicted_size = perp_size_formula(v, m);
            if (static_cast<Int>(perp.size()) != predicted_size) {
                auto ce = detail::claim("(c) size of v^perp");
                ce["v"] = to_json(v);
                ce["expected"] = predicted_size;
                ce["found"] = perp.size();
                return ce;
            }
        }
        return std::nullopt;
    });
}

/// For every v and every w in v^perp the componentwise construction yields an
/// admissible generator whose point contains both.
inline CheckResult verify_witness_construction(const Modulus &m, const OracleHooks &hooks = {}) {
    m.require_square_free("witness_construction");
    detail::require_at_most(m.d(), max_theorem_modulus, "witness_construction");
    return detail::run_check("witness_construction", [&](std::string &scope) -> std::optional<json> {
        std::size_t pairs = 0;
        for (const auto &v : all_vectors(m)) {
            for (const auto &w : perp_set(v, m, hooks.form).members) {
                ++pairs;
                const auto wit = witness_for(v, w, m);
                const bool ok = is_admissible(wit.generator, m) && scale(wit.u, wit.generator, m) == v &&
                                scale(wit.s, wit.generator, m) == w;
                if (!ok) {
                    auto ce = detail::claim("witness generator is admissible and spans v and w");
                    ce["v"] = to_json(v);
                    ce["w"] = to_json(w);
                    ce["generator"] = to_json(wit.generator);
                    ce["u"] = wit.u;
                    ce["s"] = wit.s;
                    return ce;
                }
            }
        }
        scope = std::to_string(pairs) + " orthogonal pairs";
        return std::nullopt;
    });
}

/// Closure of {X, Z} has d^3 elements matching the normal forms, the centre and
/// the commutator set are both the scalars, and the closed-form commutator
/// agrees with the four-fold product.
inline CheckResult verify_group(const Modulus &m, const OracleHooks &hooks = {}) {
    detail::require_at_most(m.d(), max_closure_modulus, "group");
    return detail::run_check("group", [&](std::string &scope) -> std::optional<json> {
        const Int d = m.d();
        const bool all_pairs = d <= max_all_pairs_modulus;
        scope = all_pairs ? "closure, centre, commutator set over all operator pairs"
                          : "closure; centre and commutator set over coset representatives";

        const auto closure = group_closure(m);
        if (static_cast<Int>(closure.size()) != d * d * d) {
            auto ce = detail::claim("closure of {X, Z} has d^3 elements");
            ce["expected"] = d * d * d;
            ce["found"] = closure.size();
            return ce;
        }
        for (const auto &w : all_operators(m)) {
            if (!closure.contains(to_matrix(w, m))) {
                auto ce = detail::claim("every normal form lies in the closure");
                ce["operator"] = to_json(w, m);
                return ce;
            }
        }

        // Operators to test against; with coset representatives the phase is 0.
        std::vector<PauliOp> probes;
        for (const auto &w : all_operators(m)) {
            if (all_pairs || w.a == 0) {
                probes.push_back(w);
            }
        }

        std::vector<PauliOp> brute_centre;
        for (const auto &w : all_operators(m)) {
            bool central = true;
            for (const auto &w2 : probes) {
                if (multiply(w, w2, m) != multiply(w2, w, m)) {
                    central = false;
                    break;
                }
            }
            if (central) {
                brute_centre.push_back(w);
            }
        }
        const auto expected_centre = centre(m);
        if (brute_centre != expected_centre) {
            auto ce = detail::claim("centre is {w^a I}");
            json found = json::array();
            for (const auto &w : brute_centre) {
                found.push_back(to_json(w, m));
            }
            ce["found"] = std::move(found);
            return ce;
        }

        std::set<PauliOp> commutators;
        for (const auto &w : probes) {
            for (const auto &w2 : probes) {
                const auto by_product = commutator_by_product(w, w2, m);
                const PauliOp closed{hooks.form(coset(w), coset(w2), m), 0, 0};
                if (by_product != closed) {
                    auto ce = detail::claim("closed-form commutator equals W W' W^-1 W'^-1");
                    ce["w"] = to_json(w, m);
                    ce["w2"] = to_json(w2, m);
                    ce["closed_form"] = to_json(closed, m);
                    ce["product"] = to_json(by_product, m);
                    return ce;
                }
                commutators.insert(by_product);
            }
        }
        if (std::vector<PauliOp>(commutators.begin(), commutators.end()) != expected_centre) {
            auto ce = detail::claim("commutator set equals the centre");
            json found = json::array();
            for (const auto &w : commutators) {
                found.push_back(to_json(w, m));
            }
            ce["found"] = std::move(found);
            return ce;
        }
        return std::nullopt;
    });
}

/// For every operator, the exhaustive commutant size equals d * |(b, c)^perp| from the formula.
inline CheckResult verify_corollary(const Modulus &m, const OracleHooks &hooks = {}) {
    m.require_square_free("corollary");
    detail::require_at_most(m.d(), max_closure_modulus, "corollary");
    return detail::run_check("corollary", [&](std::string &scope) -> std::optional<json> {
        const Int d = m.d();
        const auto ops = all_operators(m);
        const bool all_pairs = d <= max_full_commutant_modulus;
        scope = "all " + std::to_string(ops.size()) + " operators against all " + std::to_string(ops.size()) +
                (all_pairs ? "" : ", phases collapsed");
        // Commutation depends on cosets only, so above the bound each coset is
        // counted once and weighted by the d phases.
        std::vector<Int> coset_count(static_cast<std::size_t>(d * d), -1);
        for (const auto &w : ops) {
            Int count = 0;
            if (all_pairs) {
                for (const auto &w2 : ops) {
                    count += hooks.form(coset(w), coset(w2), m) == 0;
                }
            } else {
                auto &cached = coset_count[static_cast<std::size_t>(w.b * d + w.c)];
                if (cached < 0) {
                    cached = 0;
                    for (const auto &v : all_vectors(m)) {
                        cached += hooks.form(coset(w), v, m) == 0;
                    }
                    cached *= d;
                }
                count = cached;
            }
            const Int expected = commuting_count(w, m);
            if (count != expected) {
                auto ce = detail::claim("commutant size equals d * perp size formula");
                ce["operator"] = to_json(w, m);
                ce["expected"] = expected;
                ce["found"] = count;
                return ce;
            }
        }
        return std::nullopt;
    });
}

/// commutes() agrees with commutation of the exact matrices.
inline CheckResult verify_matrix_oracle(const Modulus &m, const OracleHooks &hooks = {}) {
    detail::require_at_most(m.d(), max_closure_modulus, "matrix_oracle");
    return detail::run_check("matrix_oracle", [&](std::string &scope) -> std::optional<json> {
        const bool all_pairs = m.d() <= 6;
        std::vector<PauliOp> ops;
        for (const auto &w : all_operators(m)) {
            if (all_pairs || w.a == 0) {
                ops.push_back(w);
            }
        }
        std::vector<GenPermMatrix> mats;
        mats.reserve(ops.size());
        for (const auto &w : ops) {
            mats.push_back(to_matrix(w, m));
        }
        scope = std::to_string(ops.size() * ops.size()) + (all_pairs ? " operator pairs" : " coset pairs");
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = 0; j < ops.size(); ++j) {
                const bool algebraic = hooks.form(coset(ops[i]), coset(ops[j]), m) == 0;
                const bool matrix = mats[i] * mats[j] == mats[j] * mats[i];
                if (algebraic != matrix) {
                    auto ce = detail::claim("form vanishes iff the matrices commute");
                    ce["w"] = to_json(ops[i], m);
                    ce["w2"] = to_json(ops[j], m);
                    ce["form_says_commute"] = algebraic;
                    ce["matrices_commute"] = matrix;
                    return ce;
                }
            }
        }
        return std::nullopt;
    });
}

/// Points partition the admissible vectors, each point has d vectors, and for
/// square-free d the count is the product of (p_k + 1).
inline CheckResult verify_point_count(const Modulus &m) {
    detail::require_at_most(m.d(), max_theorem_modulus, "point_count");
    return detail::run_check("point_count", [&](std::string &scope) -> std::optional<json> {
        const auto line = enumerate_points(m);
        scope = std::to_string(line.size()) + " points" + (m.square_free() ? ", formula and partition" : ", partition");
        std::vector<int> hits(static_cast<std::size_t>(m.d() * m.d()), 0);
        for (const auto &p : line) {
            if (static_cast<Int>(p.members.size()) != m.d()) {
                auto ce = detail::claim("every point has exactly d vectors");
                ce["point"] = to_json(p);
                return ce;
            }
            for (const auto &w : p.members) {
                if (is_admissible(w, m)) {
                    ++hits[static_cast<std::size_t>(w.b * m.d() + w.c)];
                }
            }
        }
        for (const auto &v : all_vectors(m)) {
            const int expected = is_admissible(v, m) ? 1 : 0;
            if (hits[static_cast<std::size_t>(v.b * m.d() + v.c)] != expected) {
                auto ce = detail::claim("every admissible vector lies in exactly one point");
                ce["v"] = to_json(v);
                ce["points"] = hits[static_cast<std::size_t>(v.b * m.d() + v.c)];
                return ce;
            }
        }
        if (m.square_free() && static_cast<Int>(line.size()) != point_count_formula(m)) {
            auto ce = detail::claim("number of points is the product of (p_k + 1)");
            ce["expected"] = point_count_formula(m);
            ce["found"] = line.size();
            return ce;
        }
        return std::nullopt;
    });
}

/// gcd(b, c, d) == 1 agrees with unimodularity, with being the first row of an
/// invertible matrix, with extending to a basis, with generating a submodule of
/// size d, and (square-free d) with the componentwise criterion.
inline CheckResult verify_admissibility(const Modulus &m) {
    detail::require_at_most(m.d(), max_admissibility_modulus, "admissibility");
    return detail::run_check("admissibility", [&](std::string &scope) -> std::optional<json> {
        const Int d = m.d();
        scope = "all " + std::to_string(d * d) + " vectors, " + (m.square_free() ? "6" : "5") + " criteria";
        std::vector<Int> stamp(static_cast<std::size_t>(d * d), -1);
        Int generation = 0;
        auto is_basis = [&](const Vector2 &v, const Vector2 &w) {
            ++generation;
            for (Int u2 = 0; u2 < d; ++u2) {
                for (Int u = 0; u < d; ++u) {
                    auto image = add(scale(u, v, m), scale(u2, w, m), m);
                    auto &slot = stamp[static_cast<std::size_t>(image.b * d + image.c)];
                    if (slot == generation) {
                        return false;
                    }
                    slot = generation;
                }
            }
            return true;
        };
        for (const auto &v : all_vectors(m)) {
            std::array<bool, 6> verdict{};
            verdict[0] = is_admissible(v, m);
            for (Int x = 0; x < d && !verdict[1]; ++x) {
                for (Int y = 0; y < d && !verdict[1]; ++y) {
                    verdict[1] = m.add(m.mul(x, v.b), m.mul(y, v.c)) == 1;
                }
            }
            for (Int x = 0; x < d && !verdict[2]; ++x) {
                for (Int y = 0; y < d && !verdict[2]; ++y) {
                    verdict[2] = is_unit(m.sub(m.mul(v.b, y), m.mul(v.c, x)), m);
                }
            }
            for (const auto &w : all_vectors(m)) {
                if (is_basis(v, w)) {
                    verdict[3] = true;
                    break;
                }
            }
            verdict[4] = static_cast<Int>(cyclic_submodule(v, m).size()) == d;
            verdict[5] = m.square_free() ? is_admissible_by_components(v, m) : verdict[0];
            if (std::adjacent_find(verdict.begin(), verdict.end(), std::not_equal_to<>()) != verdict.end()) {
                auto ce = detail::claim("admissibility criteria agree");
                ce["v"] = to_json(v);
                ce["gcd"] = verdict[0];
                ce["unimodular"] = verdict[1];
                ce["invertible_row"] = verdict[2];
                ce["basis"] = verdict[3];
                ce["free_submodule"] = verdict[4];
                ce["components"] = verdict[5];
                return ce;
            }
        }
        return std::nullopt;
    });
}

/// Names accepted by verify_all, in report order.
inline const std::vector<std::string> &check_names() {
    static const std::vector<std::string> names{
        "admissibility", "corollary", "group", "matrix_oracle", "point_count", "theorem1", "theorem2",
        "witness_construction"};
    return names;
}

/// Runs the selected checks (all when `selected` is empty), skipping those whose
/// preconditions d does not meet. Throws std::invalid_argument on unknown names.
inline VerificationReport verify_all(
    const Modulus &m, std::span<const std::string> selected = {}, const OracleHooks &hooks = {}) {
    for (const auto &name : selected) {
        if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
            throw std::invalid_argument("unknown check: " + name);
        }
    }
    auto wanted = [&](const std::string &name) {
        return selected.empty() || std::find(selected.begin(), selected.end(), name) != selected.end();
    };
    const Int d = m.d();
    auto too_large = [d](Int bound) { return "requires d <= " + std::to_string(bound); };
    const std::string needs_square_free = "requires square-free d";

    VerificationReport report{d, {}};
    for (const auto &name : check_names()) {
        if (!wanted(name)) {
            continue;
        }
        if (name == "admissibility") {
            report.checks.push_back(
                d <= max_admissibility_modulus ? verify_admissibility(m)
                                               : detail::skipped(name, too_large(max_admissibility_modulus)));
        } else if (name == "corollary") {
            if (!m.square_free()) {
                report.checks.push_back(detail::skipped(name, needs_square_free));
            } else if (d > max_closure_modulus) {
                report.checks.push_back(detail::skipped(name, too_large(max_closure_modulus)));
            } else {
                report.checks.push_back(verify_corollary(m, hooks));
            }
        } else if (name == "group" || name == "matrix_oracle") {
            if (d > max_closure_modulus) {
                report.checks.push_back(detail::skipped(name, too_large(max_closure_modulus)));
            } else {
                report.checks.push_back(name == "group" ? verify_group(m, hooks) : verify_matrix_oracle(m, hooks));
            }
        } else if (d > max_theorem_modulus) {
            report.checks.push_back(detail::skipped(name, too_large(max_theorem_modulus)));
        } else if (name == "point_count") {
            report.checks.push_back(verify_point_count(m));
        } else if (name == "theorem1") {
            report.checks.push_back(verify_theorem1(m, hooks));
        } else if (!m.square_free()) {
            report.checks.push_back(detail::skipped(name, needs_square_free));
        } else if (name == "theorem2") {
            report.checks.push_back(verify_theorem2(m, hooks));
        } else {
            report.checks.push_back(verify_witness_construction(m, hooks));
        }
    }
    return report;
}

/// Report as JSON. Timings are omitted unless requested so reruns are byte-identical.
inline json to_json(const VerificationReport &report, bool include_timing = false) {
    json checks = json::array();
    for (const auto &c : report.checks) {
        json entry;
        entry["name"] = c.name;
        entry["outcome"] = to_string(c.outcome);
        entry["scope"] = c.scope;
        if (!c.reason.empty()) {
            entry["reason"] = c.reason;
        }
        if (c.counterexample) {
            entry["counterexample"] = *c.counterexample;
        }
        if (include_timing) {
            entry["elapsed_ms"] = std::chrono::duration<double, std::milli>(c.elapsed).count();
        }
        checks.push_back(std::move(entry));
    }
    json out;
    out["d"] = report.d;
    out["all_passed"] = report.all_passed();
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace qline
