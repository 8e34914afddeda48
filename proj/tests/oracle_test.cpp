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

#include "qline/oracle.hpp"

#include <set>

#include "gtest/gtest.h"

using namespace qline;

namespace {

// Faults for mutation testing of the harness.
Int flipped_form(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return form(w, v, m);
}

Int symmetric_form(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return m.add(m.mul(v.c, w.b), m.mul(w.c, v.b));
}

const CheckResult &entry(const VerificationReport &report, const std::string &name) {
    for (const auto &c : report.checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range(name);
}

}  // namespace

TEST(oracle, theorem1) {
    for (Int d : {2, 6, 7, 12}) {
        ASSERT_TRUE(verify_theorem1(make_modulus(d)).passed()) << d;
    }
}

TEST(oracle, theorem1_field_case_perps_have_d_elements) {
    auto m = make_modulus(7);
    for (const auto &v : all_vectors(m)) {
        if (!is_zero(v)) {
            ASSERT_EQ(perp_set(v, m).size(), 7u);
        }
    }
}

TEST(oracle, theorem2) {
    for (Int d : {2, 6, 30}) {
        ASSERT_TRUE(verify_theorem2(make_modulus(d)).passed()) << d;
    }
    ASSERT_THROW(verify_theorem2(make_modulus(12)), square_free_required);
}

TEST(oracle, witness_examples) {
    auto m = make_modulus(6);
    auto wit = witness_for({2, 0}, {2, 3}, m);
    ASSERT_EQ(wit.generator, (Vector2{2, 3}));
    ASSERT_FALSE(wit.fallback_used);
    ASSERT_EQ(point_through(wit.generator, m).generator, (Vector2{2, 3}));
    ASSERT_EQ(scale(wit.u, wit.generator, m), (Vector2{2, 0}));
    ASSERT_EQ(scale(wit.s, wit.generator, m), (Vector2{2, 3}));

    auto zero = witness_for({2, 0}, {0, 0}, m);
    ASSERT_TRUE(zero.fallback_used);
    ASSERT_TRUE(is_admissible(zero.generator, m));
    ASSERT_EQ(scale(zero.u, zero.generator, m), (Vector2{2, 0}));
    ASSERT_EQ(zero.s, 0);
}

TEST(oracle, witness_prime_modulus_reduces_to_own_point) {
    auto m = make_modulus(7);
    for (const auto &v : all_vectors(m)) {
        if (is_zero(v)) {
            continue;
        }
        for (const auto &w : perp_set(v, m).members) {
            auto wit = witness_for(v, w, m);
            ASSERT_EQ(wit.generator, v);
            ASSERT_EQ(wit.u, 1);
        }
    }
}

TEST(oracle, witness_construction) {
    for (Int d : {2, 6, 30}) {
        ASSERT_TRUE(verify_witness_construction(make_modulus(d)).passed()) << d;
    }
    ASSERT_THROW(verify_witness_construction(make_modulus(12)), square_free_required);
}

TEST(oracle, group) {
    for (Int d : {2, 6, 12}) {
        ASSERT_TRUE(verify_group(make_modulus(d)).passed()) << d;
    }
    ASSERT_THROW(verify_group(make_modulus(33)), std::invalid_argument);
}

TEST(oracle, corollary) {
    ASSERT_TRUE(verify_corollary(make_modulus(6)).passed());
    ASSERT_TRUE(verify_corollary(make_modulus(10)).passed());
    ASSERT_THROW(verify_corollary(make_modulus(12)), square_free_required);
}

TEST(oracle, commutant_sizes_for_ten) {
    auto m = make_modulus(10);
    std::set<Int> sizes;
    for (const auto &w : all_operators(m)) {
        sizes.insert(commuting_count_brute(w, m));
    }
    ASSERT_EQ(sizes, (std::set<Int>{100, 200, 500, 1000}));
}

TEST(oracle, matrix_oracle_and_admissibility) {
    ASSERT_TRUE(verify_matrix_oracle(make_modulus(6)).passed());
    ASSERT_TRUE(verify_admissibility(make_modulus(12)).passed());
    ASSERT_TRUE(verify_point_count(make_modulus(12)).passed());
    ASSERT_THROW(verify_admissibility(make_modulus(31)), std::invalid_argument);
}

TEST(oracle, verify_all_six) {
    auto report = verify_all(make_modulus(6));
    ASSERT_TRUE(report.all_passed());
    ASSERT_EQ(report.checks.size(), check_names().size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        ASSERT_EQ(report.checks[i].name, check_names()[i]);
        ASSERT_EQ(report.checks[i].outcome, Outcome::pass);
    }
}

TEST(oracle, verify_all_gates_square_free_checks) {
    auto report = verify_all(make_modulus(12));
    ASSERT_TRUE(report.all_passed());
    ASSERT_EQ(entry(report, "theorem1").outcome, Outcome::pass);
    for (const char *name : {"theorem2", "witness_construction", "corollary"}) {
        ASSERT_EQ(entry(report, name).outcome, Outcome::skipped) << name;
        ASSERT_EQ(entry(report, name).reason, "requires square-free d");
    }
}

TEST(oracle, verify_all_gates_large_moduli) {
    auto report = verify_all(make_modulus(35), std::vector<std::string>{"group", "theorem2"});
    ASSERT_EQ(report.checks.size(), 2u);
    ASSERT_EQ(entry(report, "group").outcome, Outcome::skipped);
    ASSERT_EQ(entry(report, "theorem2").outcome, Outcome::pass);
}

TEST(oracle, verify_all_rejects_unknown_checks) {
    ASSERT_THROW(verify_all(make_modulus(6), std::vector<std::string>{"nosuch"}), std::invalid_argument);
}

TEST(oracle, modulus_one_is_rejected_before_verification) {
    ASSERT_THROW(verify_all(make_modulus(1)), std::invalid_argument);
}

TEST(oracle, reports_are_reproducible) {
    OracleHooks faulty{&symmetric_form};
    for (Int d : {6, 10, 12}) {
        auto m = make_modulus(d);
        ASSERT_EQ(to_json(verify_all(m)).dump(), to_json(verify_all(m)).dump());
        ASSERT_EQ(to_json(verify_all(m, {}, faulty)).dump(), to_json(verify_all(m, {}, faulty)).dump());
    }
}

TEST(oracle, sign_flip_is_caught_by_group) {
    OracleHooks faulty{&flipped_form};
    auto m = make_modulus(6);
    auto group = verify_group(m, faulty);
    ASSERT_EQ(group.outcome, Outcome::fail);
    ASSERT_TRUE(group.counterexample.has_value());
    ASSERT_FALSE(verify_all(m, {}, faulty).all_passed());
}

TEST(oracle, non_alternating_form_is_caught) {
    OracleHooks faulty{&symmetric_form};
    auto m = make_modulus(6);
    for (const auto &result : {verify_theorem2(m, faulty), verify_group(m, faulty), verify_theorem1(m, faulty),
                               verify_witness_construction(m, faulty), verify_matrix_oracle(m, faulty)}) {
        ASSERT_EQ(result.outcome, Outcome::fail) << result.name;
        ASSERT_TRUE(result.counterexample.has_value()) << result.name;
        ASSERT_TRUE(result.counterexample->contains("claim")) << result.name;
    }
}

TEST(oracle, failed_entries_carry_counterexamples) {
    OracleHooks faulty{&symmetric_form};
    for (Int d : {6, 10}) {
        for (const auto &c : verify_all(make_modulus(d), {}, faulty).checks) {
            ASSERT_EQ(c.outcome == Outcome::fail, c.counterexample.has_value()) << c.name;
        }
    }
}

TEST(oracle, report_json_shape) {
    auto j = to_json(verify_all(make_modulus(12), std::vector<std::string>{"theorem1", "theorem2"}));
    ASSERT_EQ(j["d"], 12);
    ASSERT_EQ(j["all_passed"], true);
    ASSERT_EQ(j["checks"].size(), 2u);
    ASSERT_EQ(j["checks"][0]["name"], "theorem1");
    ASSERT_EQ(j["checks"][1]["outcome"], "skipped");
    ASSERT_FALSE(j["checks"][0].contains("elapsed_ms"));
    auto timed = to_json(verify_all(make_modulus(6), std::vector<std::string>{"theorem1"}), true);
    ASSERT_TRUE(timed["checks"][0].contains("elapsed_ms"));
}
