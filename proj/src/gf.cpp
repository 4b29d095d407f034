#include "fzip/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fzip {

namespace {

// Dense polynomials over GF(p), coefficients mod p, constant term first.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    a = trim(std::move(a));
    const unsigned deg_m = static_cast<unsigned>(m.size() - 1);
    unsigned lead_inv = 1;  // canonical moduli are monic
    while (a.size() >= m.size()) {
        unsigned shift = static_cast<unsigned>(a.size() - m.size());
        unsigned c = (a.back() * lead_inv) % p;
        for (unsigned i = 0; i <= deg_m; ++i) {
            unsigned t = (c * m[i]) % p;
            a[i + shift] = (a[i + shift] + p - t) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    if (deg == 1) return true;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            unsigned long long c = code;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::mutex g_cache_mutex;
std::map<std::tuple<unsigned, unsigned, unsigned>, FieldRef> g_cache;

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned> canonical_modulus(unsigned p, unsigned k) {
    // Lexicographic scan over (c_0, c_1, ..., c_{k-1}), constant term first.
    std::vector<unsigned> c(k, 0);
    for (;;) {
        Poly f(c);
        f.push_back(1);
        if (f[0] != 0 || k == 1) {  // reducible otherwise (x divides f)
            if (poly_irreducible(f, p)) return f;
        }
        // Odometer with c_{k-1} fastest, so c_0 is the most significant slot.
        unsigned j = k;
        for (;;) {
            if (j == 0) throw std::logic_error("no irreducible found");
            --j;
            if (++c[j] < p) break;
            c[j] = 0;
        }
    }
}

FieldRef FieldParams::make(unsigned p, unsigned k, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p is not prime");
    if (k < 1) throw std::invalid_argument("make_field: k must be >= 1");
    if (e < 1 || k % e != 0)
        throw std::invalid_argument("make_field: e must divide k");
    unsigned long long card = 1;
    for (unsigned i = 0; i < k; ++i) {
        card *= p;
        if (card > kMaxCard)
            throw std::invalid_argument("make_field: p^k exceeds supported size");
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_tuple(p, k, e);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
    std::shared_ptr<FieldParams> f(new FieldParams());
    f->p_ = p;
    f->k_ = k;
    f->e_ = e;
    f->card_ = static_cast<unsigned>(card);
    f->q_ = 1;
    for (unsigned i = 0; i < e; ++i) f->q_ *= p;
    f->modulus_ = canonical_modulus(p, k);
    f->build();
    g_cache.emplace(key, f);
    return f;
}

void FieldParams::build() {
    const unsigned n = card_;
    add_.assign(static_cast<size_t>(n) * n, 0);
    mul_.assign(static_cast<size_t>(n) * n, 0);
    neg_.assign(n, 0);
    inv_.assign(n, 0);
    frob_.assign(n, 0);
    frob_inv_.assign(n, 0);

    auto decode = [&](unsigned a) {
        Poly c(k_, 0);
        for (unsigned i = 0; i < k_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        unsigned a = 0;
        for (unsigned i = k_; i-- > 0;) a = a * p_ + (i < c.size() ? c[i] : 0);
        return a;
    };

    for (unsigned a = 0; a < n; ++a) {
        Poly ca = decode(a);
        for (unsigned b = 0; b < n; ++b) {
            Poly cb = decode(b);
            Poly s(k_, 0);
            for (unsigned i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(encode(s));
            mul_[static_cast<size_t>(a) * n + b] =
                static_cast<uint16_t>(encode(poly_mod(poly_mul(ca, cb, p_), modulus_, p_)));
        }
    }
    for (unsigned a = 0; a < n; ++a) {
        Poly c = decode(a);
        for (auto& x : c) x = (p_ - x) % p_;
        neg_[a] = static_cast<uint16_t>(encode(c));
    }
    for (unsigned a = 1; a < n; ++a)
        for (unsigned b = 1; b < n; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }
    for (unsigned a = 0; a < n; ++a) {
        unsigned r = a;
        for (unsigned i = 0; i < e_; ++i) {  // x -> x^(p^e)
            unsigned rp = r;
            for (unsigned j = 1; j < p_; ++j) rp = mul(rp, r);
            r = rp;
        }
        frob_[a] = static_cast<uint16_t>(r);
        frob_inv_[r] = static_cast<uint16_t>(a);
    }
}

unsigned FieldParams::inv(unsigned a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p^k)");
    return inv_[a];
}

unsigned FieldParams::pow(unsigned a, long long n) const {
    if (n < 0) return pow(inv(a), -n);
    unsigned r = 1, b = a;
    while (n > 0) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

std::vector<unsigned> FieldParams::coeffs(unsigned a) const {
    std::vector<unsigned> c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

unsigned FieldParams::from_coeffs(const std::vector<unsigned>& c) const {
    if (c.size() > k_) throw std::invalid_argument("coefficient sequence too long");
    unsigned a = 0;
    for (unsigned i = k_; i-- > 0;) {
        unsigned ci = i < c.size() ? c[i] % p_ : 0;
        a = a * p_ + ci;
    }
    return a;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    const auto& f = a.field();
    if (!f || !b.field() || !f->same(*b.field()))
        throw std::invalid_argument("field_arith: operands from different fields");
    unsigned r = 0;
    switch (op) {
        case FieldOp::add: r = f->add(a.index(), b.index()); break;
        case FieldOp::sub: r = f->sub(a.index(), b.index()); break;
        case FieldOp::mul: r = f->mul(a.index(), b.index()); break;
        case FieldOp::div: r = f->div(a.index(), b.index()); break;
        case FieldOp::pow: {
            // exponent is b's integer index; enough for the CLI surface
            r = f->pow(a.index(), static_cast<long long>(b.index()));
            break;
        }
    }
    return FieldElement(f, r);
}

FieldElement frobenius_q(const FieldElement& a) {
    return FieldElement(a.field(), a.field()->frob_q(a.index()));
}

std::vector<FieldElement> enumerate_field(const FieldRef& f) {
    std::vector<FieldElement> out;
    out.reserve(f->card());
    for (unsigned i = 0; i < f->card(); ++i) out.emplace_back(f, i);
    return out;
}

unsigned embed_index(const FieldParams& src, unsigned idx, const FieldParams& dst) {
    if (src.same(dst)) return idx;
    if (src.p() != dst.p() || dst.k() % src.k() != 0 || src.e() != dst.e())
        throw std::invalid_argument("incompatible field extension");
    if (src.k() != 1)
        throw std::invalid_argument("only prime-field scalars can be embedded");
    // GF(p) sits inside any GF(p^k) as the constants.
    unsigned r = 0;
    for (unsigned i = 0; i < idx; ++i) r = dst.add(r, 1);
    return r;
}

}  // namespace fzip
