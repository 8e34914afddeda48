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

#include "qline/ring_core.hpp"

#include <vector>

#include "brute_force.hpp"
#include "gtest/gtest.h"

using namespace qline;

TEST(ring_core, make_modulus_six) {
    auto m = make_modulus(6);
    ASSERT_EQ(m.d(), 6);
    ASSERT_EQ(m.factors(), (std::vector<PrimePower>{{2, 1}, {3, 1}}));
    ASSERT_TRUE(m.square_free());
    // Scanned by brute::idempotent: 3 = 1 mod 2, 0 mod 3; 4 = 0 mod 2, 1 mod 3.
    ASSERT_EQ(m.idempotents(), (std::vector<Int>{3, 4}));
    ASSERT_EQ(m.add(3, 4), 1);
}

TEST(ring_core, make_modulus_prime_and_non_square_free) {
    auto seven = make_modulus(7);
    ASSERT_EQ(seven.factors(), (std::vector<PrimePower>{{7, 1}}));
    ASSERT_TRUE(seven.square_free());
    ASSERT_EQ(seven.idempotents(), (std::vector<Int>{1}));

    auto twelve = make_modulus(12);
    ASSERT_EQ(twelve.factors(), (std::vector<PrimePower>{{2, 2}, {3, 1}}));
    ASSERT_FALSE(twelve.square_free());
    ASSERT_TRUE(twelve.idempotents().empty());
}

TEST(ring_core, make_modulus_rejects_small) {
    ASSERT_THROW(make_modulus(1), std::invalid_argument);
    ASSERT_THROW(make_modulus(0), std::invalid_argument);
    ASSERT_THROW(make_modulus(-6), std::invalid_argument);
    ASSERT_THROW(make_modulus(max_modulus + 1), std::invalid_argument);
}

TEST(ring_core, factorization_invariants) {
    for (Int d = 2; d <= 500; ++d) {
        auto m = make_modulus(d);
        Int product = 1;
        Int last = 0;
        bool all_simple = true;
        for (const auto &f : m.factors()) {
            ASSERT_TRUE(is_prime(f.prime)) << d;
            ASSERT_GT(f.prime, last) << d;
            last = f.prime;
            for (int i = 0; i < f.multiplicity; ++i) {
                product *= f.prime;
            }
            all_simple = all_simple && f.multiplicity == 1;
        }
        ASSERT_EQ(product, d);
        ASSERT_EQ(m.square_free(), all_simple) << d;
        ASSERT_EQ(m.square_free(), brute::square_free(d)) << d;
    }
}

TEST(ring_core, idempotent_identities) {
    for (Int d = 2; d <= 210; ++d) {
        auto m = make_modulus(d);
        if (!m.square_free()) {
            continue;
        }
        const auto &e = m.idempotents();
        std::vector<brute::i64> primes;
        for (const auto &f : m.factors()) {
            primes.push_back(f.prime);
        }
        Int sum = 0;
        for (std::size_t k = 0; k < e.size(); ++k) {
            ASSERT_EQ(e[k], brute::idempotent(d, primes, k)) << d;
            ASSERT_EQ(m.mul(e[k], e[k]), e[k]) << d;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j != k) {
                    ASSERT_EQ(m.mul(e[j], e[k]), 0) << d;
                }
            }
            sum = m.add(sum, e[k]);
        }
        ASSERT_EQ(sum, 1 % d) << d;
    }
}

TEST(ring_core, is_unit) {
    ASSERT_TRUE(is_unit(5, make_modulus(6)));
    ASSERT_FALSE(is_unit(2, make_modulus(6)));
    ASSERT_FALSE(is_unit(0, make_modulus(6)));
    for (Int d = 2; d <= 30; ++d) {
        ASSERT_TRUE(is_unit(1, make_modulus(d)));
    }
}

TEST(ring_core, unit_count) {
    ASSERT_EQ(unit_count(make_modulus(6)), 2);
    ASSERT_EQ(unit_count(make_modulus(7)), 6);
    ASSERT_EQ(unit_count(make_modulus(30)), 8);
    for (Int d = 2; d <= 60; ++d) {
        ASSERT_EQ(unit_count(make_modulus(d)), brute::unit_count(d)) << d;
    }
}

TEST(ring_core, unit_count_square_free_product) {
    for (Int d = 2; d <= 210; ++d) {
        auto m = make_modulus(d);
        if (!m.square_free()) {
            continue;
        }
        Int product = 1;
        for (const auto &f : m.factors()) {
            product *= f.prime - 1;
        }
        ASSERT_EQ(unit_count(m), product) << d;
    }
}

TEST(ring_core, component_examples) {
    auto m = make_modulus(6);
    ASSERT_EQ(component(2, 0, m), 0);
    ASSERT_EQ(component(2, 1, m), 2);
    for (std::size_t k = 0; k < m.rank(); ++k) {
        ASSERT_EQ(component(1, k, m), 1);
    }
}

TEST(ring_core, component_errors) {
    ASSERT_THROW(component(1, 0, make_modulus(12)), square_free_required);
    ASSERT_THROW(component(1, 2, make_modulus(6)), std::out_of_range);
}

TEST(ring_core, components_are_ring_homomorphisms) {
    for (Int d = 2; d <= 30; ++d) {
        auto m = make_modulus(d);
        if (!m.square_free()) {
            continue;
        }
        for (Int x = 0; x < d; ++x) {
            for (Int y = 0; y < d; ++y) {
                for (std::size_t k = 0; k < m.rank(); ++k) {
                    const Int p = m.prime(k);
                    ASSERT_EQ(component(m.add(x, y), k, m), (component(x, k, m) + component(y, k, m)) % p);
                    ASSERT_EQ(component(m.mul(x, y), k, m), (component(x, k, m) * component(y, k, m)) % p);
                }
            }
        }
    }
}

TEST(ring_core, unit_iff_all_components_nonzero) {
    for (Int d = 2; d <= 30; ++d) {
        auto m = make_modulus(d);
        if (!m.square_free()) {
            continue;
        }
        for (Int x = 0; x < d; ++x) {
            bool all_nonzero = true;
            for (std::size_t k = 0; k < m.rank(); ++k) {
                all_nonzero = all_nonzero && component(x, k, m) != 0;
            }
            ASSERT_EQ(is_unit(x, m), all_nonzero) << x << " mod " << d;
        }
    }
}

TEST(ring_core, from_components_round_trip) {
    for (Int d : {6, 30, 105, 210}) {
        auto m = make_modulus(d);
        for (Int y = 0; y < d; ++y) {
            std::vector<Int> parts;
            for (std::size_t k = 0; k < m.rank(); ++k) {
                parts.push_back(component(y, k, m));
            }
            ASSERT_EQ(from_components(parts, m), y);
        }
    }
}

TEST(ring_core, invert) {
    ASSERT_EQ(invert(5, make_modulus(6)), 5);
    ASSERT_EQ(invert(2, make_modulus(7)), 4);
    ASSERT_EQ(invert(7, make_modulus(30)), 13);
    for (Int d = 2; d <= 60; ++d) {
        auto m = make_modulus(d);
        for (Int x = 0; x < d; ++x) {
            auto expected = brute::inverse(x, d);
            if (expected) {
                ASSERT_EQ(invert(x, m), *expected);
            } else {
                ASSERT_THROW(invert(x, m), not_invertible);
            }
        }
    }
}

TEST(ring_core, invert_reports_gcd) {
    try {
        invert(4, make_modulus(6));
        FAIL() << "expected not_invertible";
    } catch (const not_invertible &e) {
        ASSERT_EQ(e.gcd(), 2);
        ASSERT_NE(std::string(e.what()).find("gcd = 2"), std::string::npos);
    }
}

TEST(ring_core, reduce_negative) {
    auto m = make_modulus(6);
    ASSERT_EQ(m.reduce(-1), 5);
    ASSERT_EQ(m.reduce(-12), 0);
    ASSERT_EQ(m.sub(1, 5), 2);
    ASSERT_EQ(m.neg(0), 0);
}
