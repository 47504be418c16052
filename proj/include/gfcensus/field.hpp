/*
   Copyright 2026 The gfcensus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GFCENSUS_FIELD_HPP
#define GFCENSUS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gfcensus/intfun.hpp"

namespace gfcensus {

/// A field element value. Every field in this library encodes its elements as
/// the integers 0 .. size()-1: a coefficient vector (c_0, ..., c_{k-1}) over
/// the base field maps to sum c_i * base_size^i. Under this convention 0 is
/// always the additive and 1 the multiplicative identity, and the prime
/// subfield occupies the values 0 .. p-1 in every field.
using fval = std::uint32_t;

/// Largest field order this library will construct. Keeps exp/log tables and
/// exhaustive enumerations comfortably in memory.
inline constexpr std::uint64_t kConstructionCap = 1ull << 20;

/// Runtime interface of a small finite field. Concrete backends: PrimeField,
/// ExtField (an extension of any Field by a monic irreducible modulus) and
/// the subfield views inside a Tower.
class Field {
   public:
    virtual ~Field() = default;

    virtual std::uint64_t size() const noexcept = 0;
    virtual std::uint32_t characteristic() const noexcept = 0;
    /// Degree over the prime subfield, i.e. log_p(size()).
    virtual std::uint32_t degree_over_prime() const noexcept = 0;

    virtual fval add(fval a, fval b) const = 0;
    virtual fval sub(fval a, fval b) const = 0;
    virtual fval neg(fval a) const = 0;
    virtual fval mul(fval a, fval b) const = 0;
    virtual fval inv(fval a) const = 0;

    virtual std::string describe() const = 0;

    /// a^e with the usual conventions: 0^0 = 1, negative exponents invert,
    /// exponents of nonzero bases are reduced modulo size()-1.
    fval pow(fval a, std::int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::invalid_argument("pow: inversion of zero");
        }
        const std::uint64_t n = size() - 1;
        std::uint64_t r = n == 0 ? 0 : static_cast<std::uint64_t>(((e % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n));
        fval acc = 1, base = a;
        while (r) {
            if (r & 1) acc = mul(acc, base);
            base = mul(base, base);
            r >>= 1;
        }
        return acc;
    }

    /// a added to itself k times (the integer action of Z on the field).
    fval muln(fval a, std::uint64_t k) const {
        k %= characteristic();
        fval acc = 0;
        for (std::uint64_t i = 0; i < k; ++i) acc = add(acc, a);
        return acc;
    }

    /// Image of the integer k under Z -> F (k copies of 1).
    fval from_int(std::uint64_t k) const { return muln(1, k); }

    /// Trace down to the prime subfield; the result is a residue in [0, p).
    fval abs_trace(fval a) const {
        const std::uint32_t p = characteristic();
        fval acc = a, c = a;
        for (std::uint32_t i = 1; i < degree_over_prime(); ++i) {
            c = pow(c, p);
            acc = add(acc, c);
        }
        if (acc >= p) throw std::runtime_error("abs_trace: result not in prime subfield");
        return acc;
    }
};

class PrimeField final : public Field {
   public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    }

    std::uint64_t size() const noexcept override { return p_; }
    std::uint32_t characteristic() const noexcept override { return p_; }
    std::uint32_t degree_over_prime() const noexcept override { return 1; }

    fval add(fval a, fval b) const override { return (a + b) % p_; }
    fval sub(fval a, fval b) const override { return (a + p_ - b % p_) % p_; }
    fval neg(fval a) const override { return a == 0 ? 0 : p_ - a; }
    fval mul(fval a, fval b) const override {
        return static_cast<fval>(static_cast<std::uint64_t>(a) * b % p_);
    }
    fval inv(fval a) const override {
        if (a == 0) throw std::invalid_argument("inv: inversion of zero");
        return pow(a, static_cast<std::int64_t>(p_) - 2);
    }

    std::string describe() const override { return "F_" + std::to_string(p_); }

   private:
    std::uint32_t p_;
};

/// Multiplicative order of a nonzero element.
inline std::uint64_t element_order(const Field& f, fval a) {
    if (a == 0) throw std::invalid_argument("element_order: zero has no multiplicative order");
    const std::uint64_t n = f.size() - 1;
    if (n == 0) return 1;
    std::uint64_t ord = n;
    for (const auto& [p, e] : factorize(n).primes) {
        (void)e;
        while (ord % p == 0 && f.pow(a, static_cast<std::int64_t>(ord / p)) == 1) ord /= p;
    }
    return ord;
}

/// First element in enumeration order whose multiplicative order is size()-1.
inline fval find_generator(const Field& f) {
    const std::uint64_t n = f.size() - 1;
    for (fval a = 1; a < f.size(); ++a)
        if (element_order(f, a) == n) return a;
    throw std::runtime_error("find_generator: no generator found");  // unreachable
}

}  // namespace gfcensus

#endif  // GFCENSUS_FIELD_HPP
