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

#ifndef GFCENSUS_TOWER_HPP
#define GFCENSUS_TOWER_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcensus/extfield.hpp"
#include "gfcensus/factor.hpp"

namespace gfcensus {

/// Element of a tower field, as its enumeration index: the coefficient
/// vector (c_0, ..., c_{n-1}) over F_q encoded as sum c_i q^i.
using elt = fval;

inline constexpr std::uint32_t kNoIndex = 0xffffffffu;

class Tower;

/// F_{q^d} inside a tower F_{q^n} (d | n): the fixed points of the d-th
/// Frobenius power, re-encoded compactly as 0 .. q^d - 1 in ascending order
/// of their tower encodings. Arithmetic delegates to the tower and stays
/// closed. Values 0 and 1 keep their meanings.
class SubfieldView;

/// F_{q^n} over F_q: deterministic modulus, generator, discrete-log table,
/// Frobenius and trace tables, the factorization and full divisor lattice of
/// x^n - 1, and one Level per intermediate field F_{q^d}. Immutable once
/// constructed; safe to share read-only across threads.
class Tower {
   public:
    struct Level {
        std::uint32_t d = 1;                  // subfield degree over F_q
        std::uint32_t e = 1;                  // relative degree n / d
        std::uint64_t order = 0;              // q^d
        std::vector<elt> elems;               // subfield elements, ascending
        std::vector<std::uint32_t> index_of;  // tower elt -> compact index (kNoIndex outside)
        std::vector<elt> frobd;               // a -> a^(q^d)
        std::shared_ptr<const Field> view;    // the subfield as a Field
        Factorization xe1_fact;               // x^e - 1 over the view
        DivisorLattice xe1_lat;
        // coordinate machinery over F_{q^d} (only materialized for 1 < d < n)
        std::vector<elt> sub_basis;           // d subfield elements, F_q-linearly independent
        std::vector<fval> minv;               // n x n inverse change-of-basis matrix over F_q
    };

    Tower(FieldCtx base, std::uint32_t n) : base_(std::move(base)), n_(n) { construct(); }

    const FieldCtx& base() const noexcept { return base_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return qn_; }       // q^n
    std::uint64_t unit_order() const noexcept { return N_; }   // q^n - 1
    const Poly& modulus() const noexcept { return modulus_; }
    const ExtField& arith() const noexcept { return *ext_; }
    std::shared_ptr<const ExtField> arith_ptr() const noexcept { return ext_; }
    elt generator() const noexcept { return gen_; }

    elt add(elt a, elt b) const { return ext_->add(a, b); }
    elt sub(elt a, elt b) const { return ext_->sub(a, b); }
    elt neg(elt a) const { return ext_->neg(a); }

    elt mul(elt a, elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[mod_n(static_cast<std::uint64_t>(log_[a]) + log_[b])];
    }

    elt inv(elt a) const {
        if (a == 0) throw std::invalid_argument("inv: inversion of zero");
        return exp_[(N_ - log_[a]) % N_];
    }

    elt pow(elt a, std::int64_t e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw std::invalid_argument("pow: inversion of zero");
        }
        const std::int64_t n = static_cast<std::int64_t>(N_);
        const std::uint64_t r = static_cast<std::uint64_t>(((e % n) + n) % n);
        return exp_[log_[a] * r % N_];
    }

    std::uint64_t discrete_log(elt a) const {
        if (a == 0) throw std::invalid_argument("discrete_log: zero has no logarithm");
        return log_[a];
    }

    elt exp(std::uint64_t t) const { return exp_[t % N_]; }
    elt frob(elt a) const { return frob_[a]; }

    /// Trace down to the base field F_q.
    fval trace_to_base(elt a) const { return tr_[a]; }
    /// Trace all the way down to F_p, as a residue.
    std::uint32_t abs_trace(elt a) const { return abstr_[a]; }

    elt embed_base(fval c) const {
        if (c >= base_.q) throw std::invalid_argument("embed_base: value outside base field");
        return c;
    }
    bool in_base(elt a) const noexcept { return a < base_.q; }
    elt scalar_mul(fval c, elt a) const { return mul(c, a); }

    std::vector<fval> coeffs(elt a) const { return ext_->decode_vec(a); }
    elt from_coeffs(const std::vector<fval>& c) const { return ext_->encode_vec(c); }

    const Factorization& xn1_factors() const noexcept { return level_front().xe1_fact; }
    const DivisorLattice& xn1_lattice() const noexcept { return level_front().xe1_lat; }

    const std::vector<std::uint32_t>& level_degrees() const noexcept { return level_degrees_; }
    const Level& level(std::uint32_t d) const {
        for (std::size_t i = 0; i < level_degrees_.size(); ++i)
            if (level_degrees_[i] == d) return *levels_[i];
        throw std::invalid_argument("level: " + std::to_string(d) + " does not divide n");
    }
    std::size_t level_count() const noexcept { return levels_.size(); }
    const Level& level_at(std::size_t i) const { return *levels_[i]; }

    /// Coordinates of a over F_{q^d} with respect to the canonical basis,
    /// as compact view values; out must have room for level.e entries.
    void coords(const Level& lv, elt a, fval* out) const {
        if (lv.d == 1) {
            std::array<fval, kMaxExtDegree> buf;
            ext_->decode(a, buf.data());
            for (std::uint32_t i = 0; i < n_; ++i) out[i] = buf[i];
            return;
        }
        if (lv.d == n_) {
            out[0] = lv.index_of[a];
            return;
        }
        std::array<fval, kMaxExtDegree> c;
        ext_->decode(a, c.data());
        const Field& B = *base_.field;
        // y = Minv * c over F_q, then regroup blocks of d into subfield values
        for (std::uint32_t j = 0; j < lv.e; ++j) {
            elt acc = 0;
            for (std::uint32_t b = 0; b < lv.d; ++b) {
                const std::uint32_t row = j * lv.d + b;
                fval y = 0;
                for (std::uint32_t k = 0; k < n_; ++k)
                    y = B.add(y, B.mul(lv.minv[row * n_ + k], c[k]));
                if (y != 0) acc = add(acc, mul(y, lv.sub_basis[b]));
            }
            out[j] = lv.index_of[acc];
            if (out[j] == kNoIndex) throw std::runtime_error("coords: value escaped the subfield");
        }
    }

    // --- element literals: n components ';'-separated, low degree first,
    // --- each component a base-field literal ("1:0;2:1" in a tower over F_9)
    std::string elt_str(elt a) const {
        const auto c = coeffs(a);
        std::string s;
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (i) s += ';';
            s += value_str(*base_.field, c[i]);
        }
        return s;
    }

    elt parse_elt(const std::string& s) const {
        std::vector<fval> c;
        std::string cur;
        std::istringstream in(s);
        while (std::getline(in, cur, ';')) c.push_back(parse_value(*base_.field, cur));
        if (c.size() != n_)
            throw std::invalid_argument("element literal '" + s + "' needs exactly " + std::to_string(n_) +
                                        " component(s)");
        return from_coeffs(c);
    }

   private:
    const Level& level_front() const noexcept { return *levels_[0]; }  // d == 1
    std::uint64_t mod_n(std::uint64_t t) const { return t >= N_ ? t - N_ : t; }

    void construct();
    void build_coords(Level& lv);

    FieldCtx base_;
    std::uint32_t n_;
    std::uint64_t qn_ = 0, N_ = 0;
    Poly modulus_;
    std::shared_ptr<const ExtField> ext_;
    elt gen_ = 0;
    std::vector<elt> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<elt> frob_;
    std::vector<fval> tr_;
    std::vector<std::uint32_t> abstr_;
    std::vector<std::uint32_t> level_degrees_;
    std::vector<std::unique_ptr<Level>> levels_;

    friend class SubfieldView;
};

class SubfieldView final : public Field {
   public:
    SubfieldView(const Tower* t, const Tower::Level* lv) : t_(t), lv_(lv) {}

    std::uint64_t size() const noexcept override { return lv_->order; }
    std::uint32_t characteristic() const noexcept override { return t_->base().p; }
    std::uint32_t degree_over_prime() const noexcept override { return lv_->d * t_->base().v; }

    fval add(fval a, fval b) const override { return idx(t_->add(lv_->elems[a], lv_->elems[b])); }
    fval sub(fval a, fval b) const override { return idx(t_->sub(lv_->elems[a], lv_->elems[b])); }
    fval neg(fval a) const override { return idx(t_->neg(lv_->elems[a])); }
    fval mul(fval a, fval b) const override { return idx(t_->mul(lv_->elems[a], lv_->elems[b])); }
    fval inv(fval a) const override {
        if (a == 0) throw std::invalid_argument("inv: inversion of zero");
        return idx(t_->inv(lv_->elems[a]));
    }

    elt lift(fval a) const { return lv_->elems[a]; }

    std::string describe() const override {
        return "F_" + std::to_string(lv_->order) + " inside F_" + std::to_string(t_->order());
    }

   private:
    fval idx(elt a) const {
        const std::uint32_t i = lv_->index_of[a];
        if (i == kNoIndex) throw std::runtime_error("subfield view: operation left the subfield");
        return i;
    }

    const Tower* t_;
    const Tower::Level* lv_;
};

inline void Tower::construct() {
    if (n_ < 1) throw std::invalid_argument("make_tower: n must be at least 1");
    qn_ = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        qn_ *= base_.q;
        if (qn_ > kConstructionCap)
            throw std::invalid_argument("make_tower: q^n exceeds construction cap " +
                                        std::to_string(kConstructionCap));
    }
    N_ = qn_ - 1;

    modulus_ = find_irreducible(*base_.field, n_);
    ext_ = std::make_shared<const ExtField>(base_.field, modulus_);

    gen_ = find_generator(*ext_);
    exp_.resize(N_ == 0 ? 1 : N_);
    log_.assign(qn_, kNoIndex);
    exp_[0] = 1;
    log_[1] = 0;
    for (std::uint64_t t = 1; t < N_; ++t) {
        exp_[t] = ext_->mul(exp_[t - 1], gen_);
        if (log_[exp_[t]] != kNoIndex) throw std::runtime_error("make_tower: generator order defect");
        log_[exp_[t]] = static_cast<std::uint32_t>(t);
    }
    for (elt a = 1; a < qn_; ++a)
        if (log_[a] == kNoIndex) throw std::runtime_error("make_tower: log table is not a bijection");

    frob_.resize(qn_);
    frob_[0] = 0;
    for (elt a = 1; a < qn_; ++a) frob_[a] = exp_[static_cast<std::uint64_t>(log_[a]) * base_.q % N_];

    tr_.resize(qn_);
    for (elt a = 0; a < qn_; ++a) {
        elt acc = a, c = a;
        for (std::uint32_t i = 1; i < n_; ++i) {
            c = frob_[c];
            acc = add(acc, c);
        }
        if (acc >= base_.q) throw std::runtime_error("make_tower: trace escaped the base field");
        tr_[a] = acc;
    }

    std::vector<std::uint32_t> base_abs(base_.q);
    for (fval c = 0; c < base_.q; ++c) base_abs[c] = base_.field->abs_trace(c);
    abstr_.resize(qn_);
    for (elt a = 0; a < qn_; ++a) abstr_[a] = base_abs[tr_[a]];

    // one Level per divisor d of n, ascending
    for (const std::uint64_t d64 : divisors_of(n_)) level_degrees_.push_back(static_cast<std::uint32_t>(d64));
    for (const std::uint32_t d : level_degrees_) {
        auto lv = std::make_unique<Level>();
        lv->d = d;
        lv->e = n_ / d;
        lv->order = 1;
        for (std::uint32_t i = 0; i < d; ++i) lv->order *= base_.q;

        if (d == n_) {
            lv->frobd.resize(qn_);
            for (elt a = 0; a < qn_; ++a) lv->frobd[a] = a;
        } else if (d == 1) {
            lv->frobd = frob_;
        } else {
            lv->frobd.resize(qn_);
            for (elt a = 0; a < qn_; ++a) {
                elt b = a;
                for (std::uint32_t i = 0; i < d; ++i) b = frob_[b];
                lv->frobd[a] = b;
            }
        }

        lv->index_of.assign(qn_, kNoIndex);
        for (elt a = 0; a < qn_; ++a)
            if (lv->frobd[a] == a) {
                lv->elems.push_back(a);
                lv->index_of[a] = static_cast<std::uint32_t>(lv->elems.size() - 1);
            }
        if (lv->elems.size() != lv->order) throw std::runtime_error("make_tower: subfield has wrong size");

        if (d == 1) {
            lv->view = base_.field;
            lv->xe1_fact = factor_xn_minus_1(base_.field, n_);
        } else {
            lv->view = std::make_shared<const SubfieldView>(this, lv.get());
            lv->xe1_fact = factor_xn_minus_1(lv->view, lv->e);
        }
        Poly xe1 = Poly::monomial(lv->view.get(), lv->e) - Poly::one(lv->view.get());
        lv->xe1_lat = build_lattice(*lv->view, lv->xe1_fact, xe1);

        if (d > 1 && d < n_) build_coords(*lv);
        levels_.push_back(std::move(lv));
    }
}

/// Picks d subfield elements that are F_q-linearly independent (first such in
/// enumeration order) and inverts the change of basis from the coefficient
/// basis to { s_b * x^j : b < d, j < e }, so that coordinates over F_{q^d}
/// can be read off blockwise.
inline void Tower::build_coords(Level& lv) {
    const Field& B = *base_.field;
    const std::uint32_t n = n_, d = lv.d;

    std::vector<std::vector<fval>> reduced;  // row-echelon rows over F_q
    std::vector<std::uint32_t> pivots;
    for (const elt s : lv.elems) {
        if (lv.sub_basis.size() == d) break;
        if (s == 0) continue;
        std::vector<fval> row = coeffs(s);
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            const fval c = row[pivots[r]];
            if (c == 0) continue;
            for (std::uint32_t k = 0; k < n; ++k) row[k] = B.sub(row[k], B.mul(c, reduced[r][k]));
        }
        std::uint32_t piv = n;
        for (std::uint32_t k = 0; k < n; ++k)
            if (row[k] != 0) {
                piv = k;
                break;
            }
        if (piv == n) continue;  // dependent
        const fval iv = B.inv(row[piv]);
        for (std::uint32_t k = 0; k < n; ++k) row[k] = B.mul(row[k], iv);
        reduced.push_back(std::move(row));
        pivots.push_back(piv);
        lv.sub_basis.push_back(s);
    }
    if (lv.sub_basis.size() != d) throw std::runtime_error("make_tower: subfield basis search failed");

    // change-of-basis matrix: column j*d+b holds the coefficients of s_b * x^j
    std::vector<fval> m(n * n, 0);
    elt xj = 1;  // x^j
    for (std::uint32_t j = 0; j < lv.e; ++j) {
        for (std::uint32_t b = 0; b < d; ++b) {
            const auto col = coeffs(mul(lv.sub_basis[b], xj));
            for (std::uint32_t r = 0; r < n; ++r) m[r * n + j * d + b] = col[r];
        }
        xj = mul(xj, from_coeffs([&] {
            std::vector<fval> c(n, 0);
            c[1] = 1;
            return c;
        }()));
    }

    // Gauss-Jordan inversion over F_q
    std::vector<fval> inv(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t piv = col;
        while (piv < n && m[piv * n + col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("make_tower: change of basis is singular");
        if (piv != col)
            for (std::uint32_t k = 0; k < n; ++k) {
                std::swap(m[piv * n + k], m[col * n + k]);
                std::swap(inv[piv * n + k], inv[col * n + k]);
            }
        const fval iv = B.inv(m[col * n + col]);
        for (std::uint32_t k = 0; k < n; ++k) {
            m[col * n + k] = B.mul(m[col * n + k], iv);
            inv[col * n + k] = B.mul(inv[col * n + k], iv);
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const fval c = m[r * n + col];
            if (c == 0) continue;
            for (std::uint32_t k = 0; k < n; ++k) {
                m[r * n + k] = B.sub(m[r * n + k], B.mul(c, m[col * n + k]));
                inv[r * n + k] = B.sub(inv[r * n + k], B.mul(c, inv[col * n + k]));
            }
        }
    }
    lv.minv = std::move(inv);
}

/// Convenience constructor mirroring make_field.
inline Tower make_tower(FieldCtx base, std::uint32_t n) { return Tower(std::move(base), n); }

}  // namespace gfcensus

#endif  // GFCENSUS_TOWER_HPP
