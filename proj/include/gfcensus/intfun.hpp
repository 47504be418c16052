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

#ifndef GFCENSUS_INTFUN_HPP
#define GFCENSUS_INTFUN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfcensus {

/// Arithmetic functions on the integers, by trial division. Inputs are
/// desk-scale (field orders and their divisors), so nothing clever is needed.

// Trial division is guaranteed up to this bound.
inline constexpr std::uint64_t kTrialDivisionCap = 1ull << 40;

struct IntFactorization {
    std::vector<std::pair<std::uint64_t, int>> primes;  // (p, multiplicity), p ascending
};

inline IntFactorization factorize(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("factorize: m must be positive");
    if (m > kTrialDivisionCap) throw std::invalid_argument("factorize: m exceeds trial division range");
    IntFactorization out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            out.primes.emplace_back(d, e);
        }
    }
    if (m > 1) out.primes.emplace_back(m, 1);
    return out;
}

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

inline std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(m).primes) {
        std::uint64_t pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

inline int mobius(std::uint64_t m) {
    const auto f = factorize(m);
    for (const auto& [p, e] : f.primes)
        if (e > 1) return 0;
    return (f.primes.size() % 2 == 0) ? 1 : -1;
}

/// All divisors of m, ascending.
inline std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
    const auto f = factorize(m);
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : f.primes) {
        const std::size_t base = ds.size();
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    // moduli stay below 2^32 here, so 64-bit products do not overflow
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

/// Multiplicative order of a modulo m (requires gcd(a, m) = 1).
inline std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(a % m, m) != 1) throw std::invalid_argument("order_mod: a not coprime to m");
    std::uint64_t ord = euler_phi(m);
    for (const auto& [p, e] : factorize(ord).primes) {
        (void)e;
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

/// Writes q = p^v for a prime power q; returns false otherwise.
inline bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& v) {
    if (q < 2) return false;
    const auto f = factorize(q);
    if (f.primes.size() != 1) return false;
    p = static_cast<std::uint32_t>(f.primes[0].first);
    v = static_cast<std::uint32_t>(f.primes[0].second);
    return true;
}

}  // namespace gfcensus

#endif  // GFCENSUS_INTFUN_HPP
