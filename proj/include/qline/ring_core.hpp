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
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qline {

/// Residues and exponents. Values of Z_d are always kept in 0..d-1.
using Int = std::int64_t;

/// Largest modulus accepted; keeps every product of two residues inside Int.
inline constexpr Int max_modulus = (Int{1} << 31) - 1;

/// Raised by operations whose contract only holds for square-free d.
class square_free_required : public std::invalid_argument {
   public:
    square_free_required(std::string_view operation, Int d)
        : std::invalid_argument(
              std::string(operation) + " requires a square-free modulus, got d = " + std::to_string(d)) {
    }
};

/// Raised when inverting an element that shares a factor with d.
class not_invertible : public std::domain_error {
   public:
    not_invertible(Int x, Int d, Int gcd)
        : std::domain_error(
              std::to_string(x) + " is not invertible mod " + std::to_string(d) + " (gcd = " +
              std::to_string(gcd) + ")"),
          gcd_(gcd) {
    }
    Int gcd() const noexcept {
        return gcd_;
    }

   private:
    Int gcd_;
};

struct PrimePower {
    Int prime = 0;
    int multiplicity = 0;
    friend auto operator<=>(const PrimePower &, const PrimePower &) = default;
};

struct ExtendedGcd {
    Int gcd;
    Int x;  // a*x + b*y == gcd
    Int y;
};

constexpr ExtendedGcd extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

/// Trial-division factorisation into increasing prime powers. Requires n > 1.
inline std::vector<PrimePower> factorize(Int n) {
    std::vector<PrimePower> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        int mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        out.push_back({p, mult});
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

inline bool is_prime(Int n) {
    if (n < 2) {
        return false;
    }
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

/// The ring Z_d together with its factorisation and, when d is square-free,
/// the CRT idempotents e_k (e_k = 1 mod p_k, e_k = 0 mod p_j for j != k).
///
/// Indices k into factors(), idempotents() and components are 0-based.
class Modulus {
   public:
    explicit Modulus(Int d) : d_(d) {
        if (d <= 1) {
            throw std::invalid_argument("modulus must be greater than 1, got " + std::to_string(d));
        }
        if (d > max_modulus) {
            throw std::invalid_argument("modulus " + std::to_string(d) + " exceeds the supported range");
        }
        factors_ = factorize(d);
        square_free_ = true;
        for (const auto &f : factors_) {
            square_free_ = square_free_ && f.multiplicity == 1;
        }
        if (square_free_) {
            idempotents_.reserve(factors_.size());
            for (const auto &f : factors_) {
                // e = q * (q^{-1} mod p) with q = d / p.
                Int q = d / f.prime;
                auto eg = extended_gcd(q % f.prime, f.prime);
                Int q_inv = ((eg.x % f.prime) + f.prime) % f.prime;
                idempotents_.push_back(reduce(q * q_inv));
            }
        }
    }

    Int d() const noexcept {
        return d_;
    }
    const std::vector<PrimePower> &factors() const noexcept {
        return factors_;
    }
    bool square_free() const noexcept {
        return square_free_;
    }
    /// Empty unless square_free().
    const std::vector<Int> &idempotents() const noexcept {
        return idempotents_;
    }
    std::size_t rank() const noexcept {
        return factors_.size();
    }
    Int prime(std::size_t k) const {
        return factors_.at(k).prime;
    }

    void require_square_free(std::string_view operation) const {
        if (!square_free_) {
            throw square_free_required(operation, d_);
        }
    }

    Int reduce(Int x) const noexcept {
        Int r = x % d_;
        return r < 0 ? r + d_ : r;
    }
    Int add(Int x, Int y) const noexcept {
        return reduce(x + y);
    }
    Int sub(Int x, Int y) const noexcept {
        return reduce(x - y);
    }
    Int mul(Int x, Int y) const noexcept {
        return reduce(x * y);
    }
    Int neg(Int x) const noexcept {
        return reduce(-x);
    }

    bool operator==(const Modulus &other) const noexcept {
        return d_ == other.d_;
    }

   private:
    Int d_;
    std::vector<PrimePower> factors_;
    bool square_free_ = false;
    std::vector<Int> idempotents_;
};

inline Modulus make_modulus(Int d) {
    return Modulus(d);
}

inline bool is_unit(Int x, const Modulus &m) {
    return std::gcd(m.reduce(x), m.d()) == 1;
}

/// Euler's totient of d. For square-free d this is the product of (p_k - 1).
inline Int unit_count(const Modulus &m) {
    Int count = 1;
    for (const auto &f : m.factors()) {
        count *= f.prime - 1;
        for (int i = 1; i < f.multiplicity; ++i) {
            count *= f.prime;
        }
    }
    return count;
}

/// The k-th CRT component of y, identified with y mod p_k.
inline Int component(Int y, std::size_t k, const Modulus &m) {
    m.require_square_free("component");
    if (k >= m.rank()) {
        throw std::out_of_range(
            "component index " + std::to_string(k) + " out of range for " + std::to_string(m.rank()) +
            " prime factors");
    }
    Int p = m.prime(k);
    return ((y % p) + p) % p;
}

/// Inverse of component(): the element of Z_d whose components are `residues`.
inline Int from_components(std::span<const Int> residues, const Modulus &m) {
    m.require_square_free("from_components");
    if (residues.size() != m.rank()) {
        throw std::invalid_argument("expected one residue per prime factor");
    }
    Int y = 0;
    for (std::size_t k = 0; k < residues.size(); ++k) {
        y = m.add(y, m.mul(m.idempotents()[k], residues[k] % m.prime(k)));
    }
    return y;
}

inline Int invert(Int x, const Modulus &m) {
    Int r = m.reduce(x);
    auto eg = extended_gcd(r, m.d());
    if (eg.gcd != 1) {
        throw not_invertible(r, m.d(), eg.gcd);
    }
    return m.reduce(eg.x);
}

}  // namespace qline
