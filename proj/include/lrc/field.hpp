#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

// Deterministic Miller-Rabin. Exact for all 32-bit inputs: the bases
// {2,3,5,7} have no strong pseudoprime below 3'215'031'751 > 2^31.
inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint32_t a : {2u, 3u, 5u, 7u}) {
        uint64_t x = 1, b = a, e = d;
        while (e) {
            if (e & 1) x = x * b % n;
            b = b * b % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

class FieldElement;

// Prime field GF(p), 2 <= p < 2^31. Elements are held reduced in [0, p);
// products fit 64-bit intermediates.
class PrimeField {
  public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p >= (1u << 31))
            throw std::invalid_argument("field modulus must be < 2^31");
        if (!is_prime_u32(p))
            throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    }

    uint32_t modulus() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    FieldElement element(int64_t v) const;
    FieldElement zero() const;
    FieldElement one() const;

  private:
    uint32_t p_;
};

class FieldElement {
  public:
    FieldElement(uint32_t value, const PrimeField& field) : v_(value), p_(field.modulus()) {
        if (v_ >= p_) throw std::invalid_argument("field element not reduced");
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        uint32_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return FieldElement(s, a.p_);
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        uint32_t s = a.v_ + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return FieldElement(s, a.p_);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return FieldElement(static_cast<uint32_t>(uint64_t(a.v_) * b.v_ % a.p_), a.p_);
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) { return a * b.inverse(); }
    FieldElement operator-() const { return FieldElement(v_ == 0 ? 0 : p_ - v_, p_); }

    FieldElement pow(uint64_t e) const {
        uint64_t x = 1, b = v_;
        while (e) {
            if (e & 1) x = x * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return FieldElement(static_cast<uint32_t>(x), p_);
    }

    FieldElement inverse() const {
        if (v_ == 0) throw std::domain_error("inversion of zero");
        return pow(p_ - 2);
    }

    bool operator==(const FieldElement& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    FieldElement(uint32_t v, uint32_t p) : v_(v), p_(p) {}

    void check(const FieldElement& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed-field operation");
    }

    uint32_t v_;
    uint32_t p_;

    friend class PrimeField;
};

inline FieldElement PrimeField::element(int64_t v) const {
    int64_t m = v % int64_t(p_);
    if (m < 0) m += p_;
    return FieldElement(static_cast<uint32_t>(m), uint32_t(p_));
}

inline FieldElement PrimeField::zero() const { return element(0); }
inline FieldElement PrimeField::one() const { return element(1); }

// Distinct prime factors by trial division; fine for 32-bit inputs.
inline std::vector<uint32_t> prime_factors_u32(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Smallest primitive root mod p.
inline uint32_t primitive_root(const PrimeField& f) {
    uint32_t p = f.modulus();
    if (p == 2) return 1;
    std::vector<uint32_t> qs = prime_factors_u32(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint32_t q : qs) {
            if (f.element(g).pow((p - 1) / q) == f.one()) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for prime p
}

// Element of exact multiplicative order d, where d | p-1.
inline FieldElement element_of_order(const PrimeField& f, uint32_t d) {
    uint32_t p = f.modulus();
    if (d == 0 || (p - 1) % d != 0)
        throw std::invalid_argument("order must divide p-1");
    return f.element(primitive_root(f)).pow((p - 1) / d);
}

}  // namespace lrc
