#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

// Univariate polynomial over GF(p), coefficients lowest degree first.
// Invariant: the stored coefficient list is normalized (no trailing zeros);
// the zero polynomial is the empty list and has degree -1.
class Poly {
  public:
    explicit Poly(const PrimeField& f) : field_(f) {}

    static Poly zero(const PrimeField& f) { return Poly(f); }

    static Poly constant(FieldElement c) {
        Poly p(c.field());
        if (!c.is_zero()) p.c_.push_back(c.value());
        return p;
    }

    static Poly monomial(FieldElement c, size_t deg) {
        Poly p(c.field());
        if (!c.is_zero()) {
            p.c_.assign(deg + 1, 0);
            p.c_[deg] = c.value();
        }
        return p;
    }

    static Poly from_coeffs(const PrimeField& f, const std::vector<FieldElement>& coeffs) {
        Poly p(f);
        p.c_.reserve(coeffs.size());
        for (const auto& c : coeffs) {
            if (c.modulus() != f.modulus()) throw std::invalid_argument("mixed-field coefficients");
            p.c_.push_back(c.value());
        }
        p.normalize();
        return p;
    }

    const PrimeField& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    FieldElement coeff(size_t i) const {
        return field_.element(i < c_.size() ? c_[i] : 0);
    }

    std::vector<FieldElement> coeffs() const {
        std::vector<FieldElement> out;
        out.reserve(c_.size());
        for (uint32_t v : c_) out.push_back(field_.element(v));
        return out;
    }

    FieldElement operator()(FieldElement x) const {
        check_field(x.modulus());
        FieldElement acc = field_.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + field_.element(c_[i]);
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_field(b.field_.modulus());
        Poly out(a.field_);
        out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        uint32_t p = a.field_.modulus();
        for (size_t i = 0; i < out.c_.size(); ++i) {
            uint32_t s = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
            out.c_[i] = s >= p ? s - p : s;
        }
        out.normalize();
        return out;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_field(b.field_.modulus());
        Poly out(a.field_);
        out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        uint32_t p = a.field_.modulus();
        for (size_t i = 0; i < out.c_.size(); ++i) {
            uint32_t s = (i < a.c_.size() ? a.c_[i] : 0) + p - (i < b.c_.size() ? b.c_[i] : 0);
            out.c_[i] = s >= p ? s - p : s;
        }
        out.normalize();
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_field(b.field_.modulus());
        Poly out(a.field_);
        if (a.is_zero() || b.is_zero()) return out;
        uint32_t p = a.field_.modulus();
        out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                out.c_[i + j] = static_cast<uint32_t>(
                    (out.c_[i + j] + uint64_t(a.c_[i]) * b.c_[j]) % p);
            }
        }
        out.normalize();
        return out;
    }

    friend Poly operator*(const Poly& a, FieldElement s) {
        a.check_field(s.modulus());
        Poly out(a.field_);
        if (s.is_zero()) return out;
        uint32_t p = a.field_.modulus();
        out.c_.resize(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i)
            out.c_[i] = static_cast<uint32_t>(uint64_t(a.c_[i]) * s.value() % p);
        out.normalize();
        return out;
    }

    bool operator==(const Poly& o) const {
        check_field(o.field_.modulus());
        return c_ == o.c_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_field(uint32_t m) const {
        if (field_.modulus() != m) throw std::invalid_argument("mixed-field polynomial operation");
    }

    PrimeField field_;
    std::vector<uint32_t> c_;
};

// Monic polynomial with root set exactly `points`: prod (x - a).
inline Poly annihilator(const PrimeField& f, const std::vector<FieldElement>& points) {
    if (points.empty()) throw std::invalid_argument("annihilator of empty set");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("duplicate point in annihilator");
    Poly acc = Poly::constant(f.one());
    for (const auto& a : points) {
        Poly lin = Poly::from_coeffs(f, {-a, f.one()});
        acc = acc * lin;
    }
    return acc;
}

// Lagrange interpolation through (x_i, y_i); degree < #points.
inline Poly interpolate(const PrimeField& f,
                        const std::vector<std::pair<FieldElement, FieldElement>>& pts) {
    if (pts.empty()) throw std::invalid_argument("interpolation needs at least one point");
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].first == pts[j].first)
                throw std::invalid_argument("repeated x-coordinate in interpolation");

    std::vector<FieldElement> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) xs.push_back(p.first);
    Poly master = annihilator(f, xs);

    Poly out(f);
    for (const auto& [x, y] : pts) {
        // master / (X - x) by synthetic division; master is monic.
        std::vector<FieldElement> mc = master.coeffs();
        std::vector<FieldElement> q(mc.size() - 1, f.zero());
        FieldElement carry = f.zero();
        for (size_t i = mc.size(); i-- > 1;) {
            carry = mc[i] + carry * x;
            q[i - 1] = carry;
        }
        Poly qi = Poly::from_coeffs(f, q);
        FieldElement denom = qi(x);
        out = out + qi * (y / denom);
    }
    return out;
}

}  // namespace lrc
