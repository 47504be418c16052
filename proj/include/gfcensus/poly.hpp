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

#ifndef GFCENSUS_POLY_HPP
#define GFCENSUS_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfcensus/field.hpp"

namespace gfcensus {

/// Univariate polynomial over a runtime Field. Coefficients are stored
/// low-degree first and kept normalized (no trailing zeros). The zero
/// polynomial has degree() == -1. The referenced field must outlive the
/// polynomial; ownership stays with the surrounding context objects.
class Poly {
   public:
    Poly() : f_(nullptr) {}
    explicit Poly(const Field* f) : f_(f) {}
    Poly(const Field* f, std::vector<fval> coeffs) : f_(f), c_(std::move(coeffs)) { normalize(); }

    static Poly zero(const Field* f) { return Poly(f); }
    static Poly one(const Field* f) { return Poly(f, {1}); }
    static Poly constant(const Field* f, fval a) { return Poly(f, {a}); }
    static Poly x(const Field* f) { return Poly(f, {0, 1}); }
    static Poly monomial(const Field* f, std::size_t deg, fval a = 1) {
        std::vector<fval> c(deg + 1, 0);
        c[deg] = a;
        return Poly(f, std::move(c));
    }

    const Field* field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    fval leading() const { return c_.empty() ? 0 : c_.back(); }
    fval coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<fval>& coeffs() const noexcept { return c_; }

    bool operator==(const Poly& rhs) const noexcept { return c_ == rhs.c_; }
    bool operator!=(const Poly& rhs) const noexcept { return c_ != rhs.c_; }

    Poly operator+(const Poly& rhs) const {
        const Field& F = *f_;
        std::vector<fval> c(std::max(c_.size(), rhs.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(coeff(i), rhs.coeff(i));
        return Poly(f_, std::move(c));
    }

    Poly operator-(const Poly& rhs) const {
        const Field& F = *f_;
        std::vector<fval> c(std::max(c_.size(), rhs.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(coeff(i), rhs.coeff(i));
        return Poly(f_, std::move(c));
    }

    Poly operator-() const {
        const Field& F = *f_;
        std::vector<fval> c(c_);
        for (auto& v : c) v = F.neg(v);
        return Poly(f_, std::move(c));
    }

    Poly operator*(const Poly& rhs) const {
        if (is_zero() || rhs.is_zero()) return Poly(f_);
        const Field& F = *f_;
        std::vector<fval> c(c_.size() + rhs.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j)
                c[i + j] = F.add(c[i + j], F.mul(c_[i], rhs.c_[j]));
        }
        return Poly(f_, std::move(c));
    }

    Poly scaled(fval s) const {
        const Field& F = *f_;
        std::vector<fval> c(c_);
        for (auto& v : c) v = F.mul(v, s);
        return Poly(f_, std::move(c));
    }

    Poly make_monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(f_->inv(leading()));
    }

    fval eval(fval at) const {
        const Field& F = *f_;
        fval acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, at), c_[i]);
        return acc;
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_;
    std::vector<fval> c_;
};

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
    const Field& F = *a.field();
    if (a.degree() < b.degree()) return {Poly(a.field()), a};
    const fval lead_inv = F.inv(b.leading());
    std::vector<fval> rem(a.coeffs());
    std::vector<fval> quot(a.degree() - b.degree() + 1, 0);
    for (int i = a.degree(); i >= b.degree(); --i) {
        const fval c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const fval q = F.mul(c, lead_inv);
        quot[static_cast<std::size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& r = rem[static_cast<std::size_t>(i - b.degree() + j)];
            r = F.sub(r, F.mul(q, b.coeff(static_cast<std::size_t>(j))));
        }
    }
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly acc = Poly::one(base.field());
    base = base % mod;
    while (e) {
        if (e & 1) acc = (acc * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return acc;
}

/// y -> y^(Q^times) mod f, by iterated exponentiation with exponent Q.
inline Poly frobenius_power_mod(Poly y, std::uint32_t times, const Poly& f) {
    const std::uint64_t q = f.field()->size();
    for (std::uint32_t i = 0; i < times; ++i) y = pow_mod(std::move(y), q, f);
    return y;
}

/// Deterministic irreducibility test: f of degree d over F_Q is irreducible
/// iff x^(Q^d) = x mod f and gcd(x^(Q^(d/r)) - x, f) = 1 for every prime r | d.
inline bool is_irreducible(const Poly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly fm = f.make_monic();
    const Poly x = Poly::x(f.field());
    if (frobenius_power_mod(x, static_cast<std::uint32_t>(d), fm) != (x % fm)) return false;
    for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(d)).primes) {
        (void)e;
        const Poly y = frobenius_power_mod(x, static_cast<std::uint32_t>(d / static_cast<int>(r)), fm);
        if (poly_gcd(y - x, fm).degree() != 0) return false;
    }
    return true;
}

/// Canonical ordering: by degree, then by coefficient vector compared from
/// the highest index down. Equivalent to comparing the base-Q encodings
/// of the coefficient vectors.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const fval ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
        if (ca != cb) return ca < cb;
    }
    return false;
}

/// The monic irreducible polynomial of degree d whose non-leading coefficient
/// vector (c_0, ..., c_{d-1}), read as the base-Q integer sum c_i Q^i, is
/// minimal. Deterministic modulus selection for reproducible contexts.
inline Poly find_irreducible(const Field& F, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("find_irreducible: degree must be at least 1");
    const std::uint64_t q = F.size();
    for (std::uint64_t enc = 0;; ++enc) {
        std::vector<fval> c(d + 1, 0);
        std::uint64_t e = enc;
        for (std::uint32_t i = 0; i < d; ++i) {
            c[i] = static_cast<fval>(e % q);
            e /= q;
        }
        if (e != 0) throw std::runtime_error("find_irreducible: exhausted candidates");  // unreachable
        c[d] = 1;
        Poly cand(&F, std::move(c));
        if (is_irreducible(cand)) return cand;
    }
}

/// Renders a field value as its residue vector over F_p, ':'-joined
/// ("2:1" in F_9; plain "2" in a prime field).
inline std::string value_str(const Field& F, fval a) {
    const std::uint32_t p = F.characteristic(), v = F.degree_over_prime();
    std::string s;
    fval rest = a;
    for (std::uint32_t i = 0; i < v; ++i) {
        if (i) s += ':';
        s += std::to_string(rest % p);
        rest /= p;
    }
    return s;
}

inline fval parse_value(const Field& F, const std::string& s) {
    const std::uint32_t p = F.characteristic(), v = F.degree_over_prime();
    std::vector<std::uint64_t> digits;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ':')) {
        if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field value literal '" + s + "'");
        digits.push_back(std::stoull(cur));
    }
    if (digits.size() != v)
        throw std::invalid_argument("field value literal '" + s + "' needs exactly " + std::to_string(v) +
                                    " residue(s)");
    std::uint64_t acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p)
            throw std::invalid_argument("residue " + std::to_string(digits[i]) + " out of range mod " +
                                        std::to_string(p));
        acc = acc * p + digits[i];
    }
    return static_cast<fval>(acc);
}

/// Coefficient-string form, ascending: "1,1,1" is x^2+x+1 over F_2.
inline std::string poly_str(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) s += ',';
        s += value_str(*f.field(), f.coeff(static_cast<std::size_t>(i)));
    }
    return s;
}

inline Poly parse_poly(const Field& F, const std::string& s) {
    std::vector<fval> c;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) c.push_back(parse_value(F, cur));
    if (c.empty()) throw std::invalid_argument("empty polynomial literal");
    return Poly(&F, std::move(c));
}

/// Human-readable form, e.g. "x^2+x+1" or "x^2+(2:1)x+2".
inline std::string poly_pretty(const Poly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    const Field& F = *f.field();
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        const fval c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        std::string cs = value_str(F, c);
        const bool composite = cs.find(':') != std::string::npos;
        if (i == 0) {
            s += composite ? "(" + cs + ")" : cs;
        } else {
            if (c != 1) s += composite ? "(" + cs + ")" : cs;
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace gfcensus

#endif  // GFCENSUS_POLY_HPP
