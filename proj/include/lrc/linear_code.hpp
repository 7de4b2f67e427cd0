#pragma once

#include <stdexcept>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

// An [n, k] linear code over GF(q), held as a generator matrix (rows span
// the code) with the parity-check matrix derived on construction. The
// generator is kept exactly as provided; dimension() reports its actual
// row-space rank, so rank-deficient (e.g. corrupted) inputs are representable
// and detectable.
class LinearCode {
  public:
    static LinearCode from_generator(Matrix g) {
        Matrix h = nullspace(g);
        size_t k = g.cols() - h.rows();
        return LinearCode(std::move(g), std::move(h), k);
    }

    static LinearCode from_parity_check(Matrix h) {
        Matrix g = nullspace(h);
        size_t k = g.rows();
        return LinearCode(std::move(g), std::move(h), k);
    }

    const PrimeField& field() const { return gen_.field(); }
    size_t length() const { return gen_.cols(); }
    size_t dimension() const { return k_; }

    const Matrix& generator() const { return gen_; }
    const Matrix& parity_check() const { return parity_; }

    // Independent spanning rows (RREF of the generator); preferred basis for
    // codeword enumeration.
    Matrix basis() const {
        Echelon e = row_reduce(gen_);
        Matrix b(field(), e.rank, gen_.cols());
        for (size_t i = 0; i < e.rank; ++i)
            for (size_t j = 0; j < gen_.cols(); ++j) b.set(i, j, e.rref.at(i, j));
        return b;
    }

    std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const {
        return gen_.left_mul(message);
    }

    bool is_codeword(const std::vector<FieldElement>& word) const {
        for (const auto& v : parity_.right_mul(word))
            if (!v.is_zero()) return false;
        return true;
    }

  private:
    LinearCode(Matrix g, Matrix h, size_t k) : gen_(std::move(g)), parity_(std::move(h)), k_(k) {}

    Matrix gen_;
    Matrix parity_;
    size_t k_;
};

}  // namespace lrc
