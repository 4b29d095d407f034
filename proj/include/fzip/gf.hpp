#ifndef FZIP_GF_HPP
#define FZIP_GF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fzip {

// Exact arithmetic in GF(p^k), viewed as an algebra over GF(q) with q = p^e,
// e | k.  Elements are indices into per-field lookup tables; the index of an
// element with power-basis coordinates (c_0,...,c_{k-1}) is sum c_i p^i, so
// index 0 is zero and index 1 is one.
class FieldParams;
using FieldRef = std::shared_ptr<const FieldParams>;

class FieldParams : public std::enable_shared_from_this<FieldParams> {
public:
    // Largest supported field size; tables are quadratic in this.
    static constexpr unsigned kMaxCard = 1024;

    static FieldRef make(unsigned p, unsigned k, unsigned e = 1);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned e() const { return e_; }
    unsigned card() const { return card_; }        // p^k
    unsigned q() const { return q_; }              // p^e
    // Monic canonical modulus, constant term first, k+1 coefficients.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * card_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * card_ + neg_[b]]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * card_ + b]; }
    unsigned inv(unsigned a) const;
    unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }
    unsigned pow(unsigned a, long long n) const;
    unsigned frob_q(unsigned a) const { return frob_[a]; }      // x -> x^q
    unsigned frob_q_inv(unsigned a) const { return frob_inv_[a]; }

    std::vector<unsigned> coeffs(unsigned a) const;             // length k, mod p
    unsigned from_coeffs(const std::vector<unsigned>& c) const;

    bool same(const FieldParams& o) const {
        return p_ == o.p_ && k_ == o.k_ && e_ == o.e_;
    }

private:
    FieldParams() = default;
    void build();

    unsigned p_ = 0, k_ = 0, e_ = 0, card_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_, inv_, frob_, frob_inv_;
};

// Value-semantic element carrying its field.  Cheap to copy.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldRef f, unsigned idx) : field_(std::move(f)), idx_(idx) {}

    const FieldRef& field() const { return field_; }
    unsigned index() const { return idx_; }
    std::vector<unsigned> coeffs() const { return field_->coeffs(idx_); }
    bool is_zero() const { return idx_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.idx_ == b.idx_ && a.field_->same(*b.field_);
    }

private:
    FieldRef field_;
    unsigned idx_ = 0;
};

enum class FieldOp { add, sub, mul, div, pow };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);
FieldElement frobenius_q(const FieldElement& a);
std::vector<FieldElement> enumerate_field(const FieldRef& f);

// The canonical (lexicographically smallest, constant term first) monic
// irreducible of degree k over GF(p); constant term first, k+1 entries.
std::vector<unsigned> canonical_modulus(unsigned p, unsigned k);

bool is_prime(unsigned n);

// Deterministic embedding GF(p) -> GF(p^k).  Only prime-field sources are
// supported; larger strict towers are not needed anywhere.
unsigned embed_index(const FieldParams& src, unsigned idx, const FieldParams& dst);

}  // namespace fzip

#endif
