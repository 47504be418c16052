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

#ifndef GFCENSUS_FACTOR_HPP
#define GFCENSUS_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcensus/extfield.hpp"
#include "gfcensus/intfun.hpp"
#include "gfcensus/poly.hpp"

namespace gfcensus {

/// Factorization into monic irreducibles, canonically ordered by degree and
/// then by coefficient encoding.
struct Factorization {
    std::vector<std::pair<Poly, int>> factors;

    Poly product(const Field* f) const {
        Poly acc = Poly::one(f);
        for (const auto& [g, m] : factors)
            for (int i = 0; i < m; ++i) acc = acc * g;
        return acc;
    }

    std::string str() const {
        std::string s;
        for (const auto& [g, m] : factors) {
            if (!s.empty()) s += " * ";
            s += "(" + poly_str(g) + ")";
            if (m > 1) s += "^" + std::to_string(m);
        }
        return s.empty() ? "1" : s;
    }
};

inline void sort_canonical(Factorization& f) {
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
}

/// M on a factored polynomial: 0 unless squarefree, else (-1)^(#factors).
inline int mobius_of(const Factorization& fact) {
    for (const auto& [g, m] : fact.factors) {
        (void)g;
        if (m > 1) return 0;
    }
    return fact.factors.size() % 2 == 0 ? 1 : -1;
}

/// |units of F_Q[x]/(f)| for factored f: product over distinct irreducible
/// factors g^m of Q^(deg g * m) - Q^(deg g * (m-1)).
inline std::uint64_t euler_phi_of(const Field& F, const Factorization& fact) {
    std::uint64_t acc = 1;
    const std::uint64_t q = F.size();
    for (const auto& [g, m] : fact.factors) {
        std::uint64_t qd = 1;
        for (int i = 0; i < g.degree() * (m - 1); ++i) qd *= q;
        std::uint64_t qdm = qd;
        for (int i = 0; i < g.degree(); ++i) qdm *= q;
        acc *= qdm - qd;
    }
    return acc;
}

inline std::size_t omega_distinct(const Factorization& fact) { return fact.factors.size(); }

namespace detail {
inline void check_factorization_of(const Poly& f, const Factorization& fact) {
    if (fact.product(f.field()) != f.make_monic())
        throw std::invalid_argument("factorization does not multiply back to the given polynomial");
}
}  // namespace detail

inline int mobius_poly(const Poly& f, const Factorization& fact) {
    detail::check_factorization_of(f, fact);
    return mobius_of(fact);
}

inline std::uint64_t euler_phi_poly(const Poly& f, const Factorization& fact) {
    if (f.is_zero()) throw std::invalid_argument("euler_phi_poly: zero polynomial");
    detail::check_factorization_of(f, fact);
    return euler_phi_of(*f.field(), fact);
}

/// Factors x^n - 1 over the given field by cyclotomic cosets. With
/// n = p^a * m, gcd(m, p) = 1, we have x^n - 1 = (x^m - 1)^(p^a); for each
/// divisor e | m the primitive e-th roots of unity split into orbits of
/// multiplication by Q mod e, and each orbit yields one irreducible factor,
/// computed in a splitting extension F_(Q^ord_e(Q)) and mapped back down.
/// Fully deterministic; factors come out canonically ordered.
inline Factorization factor_xn_minus_1(std::shared_ptr<const Field> K, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("factor_xn_minus_1: n must be at least 1");
    const std::uint32_t p = K->characteristic();
    const std::uint64_t Q = K->size();
    std::uint32_t m = n;
    int pa = 1;
    while (m % p == 0) {
        m /= p;
        pa *= static_cast<int>(p);
    }

    Factorization out;
    for (const std::uint64_t e : divisors_of(m)) {
        if (e == 1) {
            out.factors.emplace_back(Poly(K.get(), {K->neg(1), 1}), pa);
            continue;
        }
        const std::uint64_t k = order_mod(Q % e, e);
        std::shared_ptr<const Field> E = K;
        if (k > 1) E = std::make_shared<const ExtField>(K, find_irreducible(*K, static_cast<std::uint32_t>(k)));
        std::uint64_t unit = E->size() - 1;
        if (unit % e != 0) throw std::runtime_error("factor_xn_minus_1: splitting field too small");
        const fval zeta = E->pow(find_generator(*E), static_cast<std::int64_t>(unit / e));

        std::vector<bool> seen(e, false);
        for (std::uint64_t u = 1; u < e; ++u) {
            if (seen[u] || std::gcd(u, e) != 1) continue;
            // orbit of u under multiplication by Q mod e
            Poly factor = Poly::one(E.get());
            std::uint64_t j = u;
            do {
                seen[j] = true;
                factor = factor * Poly(E.get(), {E->neg(E->pow(zeta, static_cast<std::int64_t>(j))), 1});
                j = j * (Q % e) % e;
            } while (j != u);
            // coefficients lie in K; under the mixed-radix encoding that
            // means every value is smaller than Q
            std::vector<fval> down(factor.coeffs());
            for (const fval c : down)
                if (c >= Q) throw std::runtime_error("factor_xn_minus_1: coefficient not in base field");
            out.factors.emplace_back(Poly(K.get(), std::move(down)), pa);
        }
    }
    sort_canonical(out);

    // multiply back as a construction-time self check
    Poly xn1 = Poly::monomial(K.get(), n);
    xn1 = xn1 - Poly::one(K.get());
    if (out.product(K.get()) != xn1) throw std::runtime_error("factor_xn_minus_1: product check failed");
    return out;
}

/// One monic divisor of the lattice parent, with its arithmetic data.
struct Divisor {
    Poly poly;
    Poly cofactor;            // parent / poly
    std::vector<int> exps;    // exponents with respect to the parent factorization
    int mobius = 0;           // M(poly)
    std::uint64_t phi = 0;    // Phi(poly)
};

/// All monic divisors of a factored polynomial (canonically ordered), with
/// M, Phi and cofactors precomputed. Safe to materialize because the parent
/// here is always x^n - 1 at desk scale.
struct DivisorLattice {
    Poly parent;
    Factorization fact;
    std::vector<Divisor> divisors;              // sorted by (degree, encoding)
    std::vector<std::size_t> factor_index;      // lattice index of each irreducible factor

    std::size_t index_of(const Poly& f) const {
        const auto it = std::lower_bound(divisors.begin(), divisors.end(), f,
                                         [](const Divisor& d, const Poly& g) { return poly_less(d.poly, g); });
        if (it == divisors.end() || it->poly != f)
            throw std::invalid_argument("polynomial is not a divisor of the lattice parent");
        return static_cast<std::size_t>(it - divisors.begin());
    }
};

inline DivisorLattice build_lattice(const Field& F, Factorization fact, Poly parent) {
    DivisorLattice lat;
    lat.fact = std::move(fact);
    lat.parent = std::move(parent);
    const std::size_t nf = lat.fact.factors.size();
    std::vector<int> exps(nf, 0);
    for (;;) {
        Divisor d;
        d.exps = exps;
        d.poly = Poly::one(&F);
        d.cofactor = Poly::one(&F);
        bool squarefree = true;
        int distinct = 0;
        d.phi = 1;
        for (std::size_t i = 0; i < nf; ++i) {
            const auto& [g, m] = lat.fact.factors[i];
            for (int t = 0; t < exps[i]; ++t) d.poly = d.poly * g;
            for (int t = exps[i]; t < m; ++t) d.cofactor = d.cofactor * g;
            if (exps[i] > 0) {
                ++distinct;
                if (exps[i] > 1) squarefree = false;
                std::uint64_t qd = 1;
                for (int t = 0; t < g.degree() * (exps[i] - 1); ++t) qd *= F.size();
                std::uint64_t qdm = qd;
                for (int t = 0; t < g.degree(); ++t) qdm *= F.size();
                d.phi *= qdm - qd;
            }
        }
        d.mobius = squarefree ? (distinct % 2 == 0 ? 1 : -1) : 0;
        lat.divisors.push_back(std::move(d));
        // odometer over exponent tuples
        std::size_t i = 0;
        while (i < nf && exps[i] == lat.fact.factors[i].second) {
            exps[i] = 0;
            ++i;
        }
        if (i == nf) break;
        ++exps[i];
    }
    std::sort(lat.divisors.begin(), lat.divisors.end(),
              [](const Divisor& a, const Divisor& b) { return poly_less(a.poly, b.poly); });
    lat.factor_index.resize(nf);
    for (std::size_t i = 0; i < nf; ++i) lat.factor_index[i] = lat.index_of(lat.fact.factors[i].first);
    return lat;
}

/// Trial-division factorization for small general polynomials (used for the
/// hypothesis checks on exponential-sum inputs). Returns monic factors; the
/// leading unit is the caller's business.
inline Factorization factor_small(const Poly& f) {
    if (f.degree() < 0) throw std::invalid_argument("factor_small: zero polynomial");
    const Field& F = *f.field();
    Factorization out;
    Poly work = f.make_monic();
    // linear factors by root scan
    for (fval r = 0; r < F.size() && work.degree() >= 1; ++r) {
        const Poly lin(&F, {F.neg(r), 1});
        int mult = 0;
        while (work.degree() >= 1 && work.eval(r) == 0) {
            work = work / lin;
            ++mult;
        }
        if (mult) out.factors.emplace_back(lin, mult);
    }
    // higher degrees by ascending trial division
    for (std::uint32_t deg = 2; static_cast<int>(2 * deg) <= work.degree(); ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= F.size();
        for (std::uint64_t enc = 0; enc < count && work.degree() >= 1; ++enc) {
            std::vector<fval> c(deg + 1, 0);
            std::uint64_t e = enc;
            for (std::uint32_t i = 0; i < deg; ++i) {
                c[i] = static_cast<fval>(e % F.size());
                e /= F.size();
            }
            c[deg] = 1;
            const Poly cand(&F, std::move(c));
            int mult = 0;
            while (work.degree() >= cand.degree() && divides(cand, work)) {
                work = work / cand;
                ++mult;
            }
            if (mult) out.factors.emplace_back(cand, mult);
        }
    }
    if (work.degree() >= 1) out.factors.emplace_back(work, 1);
    sort_canonical(out);
    return out;
}

}  // namespace gfcensus

#endif  // GFCENSUS_FACTOR_HPP
