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

#ifndef GFCENSUS_EXTFIELD_HPP
#define GFCENSUS_EXTFIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfcensus/poly.hpp"

namespace gfcensus {

/// Largest extension degree that can occur under the construction cap
/// (2^20 over F_2), with headroom.
inline constexpr std::uint32_t kMaxExtDegree = 24;

/// Extension of an arbitrary base Field by a monic irreducible modulus.
/// Element values are mixed-radix encodings of the coefficient vector:
/// (c_0, ..., c_{k-1}) <-> sum c_i * Q^i with Q the base field order. A value
/// therefore lies in the base field exactly when it is smaller than Q.
class ExtField final : public Field {
   public:
    ExtField(std::shared_ptr<const Field> base, Poly modulus)
        : base_(std::move(base)), modulus_(std::move(modulus)) {
        if (modulus_.field() != base_.get())
            throw std::invalid_argument("ExtField: modulus not over the given base field");
        if (!modulus_.is_monic() || modulus_.degree() < 1)
            throw std::invalid_argument("ExtField: modulus must be monic of degree >= 1");
        if (!is_irreducible(modulus_)) throw std::invalid_argument("ExtField: modulus is reducible");
        k_ = static_cast<std::uint32_t>(modulus_.degree());
        if (k_ > kMaxExtDegree) throw std::invalid_argument("ExtField: degree exceeds construction cap");
        size_ = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            size_ *= base_->size();
            if (size_ > kConstructionCap)
                throw std::invalid_argument("ExtField: field order exceeds construction cap " +
                                            std::to_string(kConstructionCap));
        }
        neg_tail_.resize(k_);
        for (std::uint32_t i = 0; i < k_; ++i) neg_tail_[i] = base_->neg(modulus_.coeff(i));
    }

    std::uint64_t size() const noexcept override { return size_; }
    std::uint32_t characteristic() const noexcept override { return base_->characteristic(); }
    std::uint32_t degree_over_prime() const noexcept override { return k_ * base_->degree_over_prime(); }

    const Field& base() const noexcept { return *base_; }
    std::shared_ptr<const Field> base_ptr() const noexcept { return base_; }
    std::uint32_t ext_degree() const noexcept { return k_; }
    const Poly& modulus() const noexcept { return modulus_; }

    bool in_base(fval a) const noexcept { return a < base_->size(); }

    void decode(fval a, fval* out) const noexcept {
        const std::uint64_t q = base_->size();
        std::uint64_t rest = a;
        for (std::uint32_t i = 0; i < k_; ++i) {
            out[i] = static_cast<fval>(rest % q);
            rest /= q;
        }
    }

    fval encode(const fval* in) const noexcept {
        const std::uint64_t q = base_->size();
        std::uint64_t acc = 0;
        for (std::uint32_t i = k_; i-- > 0;) acc = acc * q + in[i];
        return static_cast<fval>(acc);
    }

    std::vector<fval> decode_vec(fval a) const {
        std::vector<fval> c(k_);
        decode(a, c.data());
        return c;
    }

    fval encode_vec(const std::vector<fval>& c) const {
        if (c.size() != k_) throw std::invalid_argument("encode_vec: wrong coefficient count");
        return encode(c.data());
    }

    fval add(fval a, fval b) const override {
        std::array<fval, kMaxExtDegree> x, y;
        decode(a, x.data());
        decode(b, y.data());
        for (std::uint32_t i = 0; i < k_; ++i) x[i] = base_->add(x[i], y[i]);
        return encode(x.data());
    }

    fval sub(fval a, fval b) const override {
        std::array<fval, kMaxExtDegree> x, y;
        decode(a, x.data());
        decode(b, y.data());
        for (std::uint32_t i = 0; i < k_; ++i) x[i] = base_->sub(x[i], y[i]);
        return encode(x.data());
    }

    fval neg(fval a) const override {
        std::array<fval, kMaxExtDegree> x;
        decode(a, x.data());
        for (std::uint32_t i = 0; i < k_; ++i) x[i] = base_->neg(x[i]);
        return encode(x.data());
    }

    fval mul(fval a, fval b) const override {
        if (a == 0 || b == 0) return 0;
        std::array<fval, kMaxExtDegree> x, y;
        std::array<fval, 2 * kMaxExtDegree> acc{};
        decode(a, x.data());
        decode(b, y.data());
        acc.fill(0);
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (x[i] == 0) continue;
            for (std::uint32_t j = 0; j < k_; ++j)
                acc[i + j] = base_->add(acc[i + j], base_->mul(x[i], y[j]));
        }
        // x^k = -(m_0 + ... + m_{k-1} x^{k-1}), folded in from the top
        for (std::uint32_t j = 2 * k_ - 2; j >= k_ && j < 2 * kMaxExtDegree; --j) {
            const fval c = acc[j];
            if (c == 0) continue;
            for (std::uint32_t i = 0; i < k_; ++i)
                acc[j - k_ + i] = base_->add(acc[j - k_ + i], base_->mul(c, neg_tail_[i]));
        }
        return encode(acc.data());
    }

    fval inv(fval a) const override {
        if (a == 0) throw std::invalid_argument("inv: inversion of zero");
        return pow(a, static_cast<std::int64_t>(size_) - 2);
    }

    std::string describe() const override {
        return "F_" + std::to_string(size_) + " = (" + base_->describe() + ")[x]/(" + poly_str(modulus_) + ")";
    }

   private:
    std::shared_ptr<const Field> base_;
    Poly modulus_;
    std::uint32_t k_ = 0;
    std::uint64_t size_ = 0;
    std::vector<fval> neg_tail_;
};

/// A concrete base field F_q, q = p^v: the prime field for v = 1, otherwise
/// the extension of F_p by the minimal-encoding irreducible modulus of
/// degree v. Construction is deterministic: the same (p, v) always yields
/// the same field.
struct FieldCtx {
    std::shared_ptr<const Field> field;
    std::uint32_t p = 0;
    std::uint32_t v = 1;
    std::uint64_t q = 0;
    Poly modulus;  // over F_p; empty when v == 1

    const Field& operator*() const noexcept { return *field; }
    const Field* get() const noexcept { return field.get(); }
};

inline FieldCtx make_field(std::uint32_t p, std::uint32_t v) {
    if (v < 1) throw std::invalid_argument("make_field: v must be at least 1");
    auto prime = std::make_shared<const PrimeField>(p);  // validates primality
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < v; ++i) {
        q *= p;
        if (q > kConstructionCap)
            throw std::invalid_argument("make_field: p^v exceeds construction cap " +
                                        std::to_string(kConstructionCap));
    }
    FieldCtx ctx;
    ctx.p = p;
    ctx.v = v;
    ctx.q = q;
    if (v == 1) {
        ctx.field = prime;
    } else {
        ctx.modulus = find_irreducible(*prime, v);
        ctx.field = std::make_shared<const ExtField>(prime, ctx.modulus);
    }
    return ctx;
}

}  // namespace gfcensus

#endif  // GFCENSUS_EXTFIELD_HPP
