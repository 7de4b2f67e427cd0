#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

// Dense matrix over GF(p), row-major. All entries share one field.
class Matrix {
  public:
    Matrix(const PrimeField& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const PrimeField& f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
        return m;
    }

    const PrimeField& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement at(size_t i, size_t j) const { return field_.element(a_[i * cols_ + j]); }
    uint32_t raw(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    void set(size_t i, size_t j, FieldElement v) {
        if (v.modulus() != field_.modulus()) throw std::invalid_argument("mixed-field matrix entry");
        a_[i * cols_ + j] = v.value();
    }
    void set_raw(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v % field_.modulus(); }

    void swap_rows(size_t i, size_t j) {
        for (size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
    }

    // row[i] *= s
    void scale_row(size_t i, FieldElement s) {
        uint64_t f = s.value();
        uint32_t p = field_.modulus();
        for (size_t c = 0; c < cols_; ++c)
            a_[i * cols_ + c] = static_cast<uint32_t>(a_[i * cols_ + c] * f % p);
    }

    // row[dst] -= f * row[src]
    void subtract_scaled_row(size_t dst, size_t src, FieldElement fac) {
        uint64_t f = fac.value();
        if (f == 0) return;
        uint32_t p = field_.modulus();
        for (size_t c = 0; c < cols_; ++c) {
            uint64_t sub = f * a_[src * cols_ + c] % p;
            uint32_t cur = a_[dst * cols_ + c];
            a_[dst * cols_ + c] = static_cast<uint32_t>(cur >= sub ? cur - sub : cur + p - sub);
        }
    }

    std::vector<FieldElement> row(size_t i) const {
        std::vector<FieldElement> out;
        out.reserve(cols_);
        for (size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
        return out;
    }

    // y = x * M for a length-rows() vector x.
    std::vector<FieldElement> left_mul(const std::vector<FieldElement>& x) const {
        if (x.size() != rows_) throw std::invalid_argument("vector/matrix size mismatch");
        uint32_t p = field_.modulus();
        std::vector<uint64_t> acc(cols_, 0);
        for (size_t i = 0; i < rows_; ++i) {
            if (x[i].modulus() != p) throw std::invalid_argument("mixed-field vector");
            uint64_t xi = x[i].value();
            if (xi == 0) continue;
            for (size_t j = 0; j < cols_; ++j) acc[j] = (acc[j] + xi * a_[i * cols_ + j]) % p;
        }
        std::vector<FieldElement> out;
        out.reserve(cols_);
        for (size_t j = 0; j < cols_; ++j) out.push_back(field_.element(int64_t(acc[j])));
        return out;
    }

    // y = M * x for a length-cols() vector x.
    std::vector<FieldElement> right_mul(const std::vector<FieldElement>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("vector/matrix size mismatch");
        uint32_t p = field_.modulus();
        std::vector<FieldElement> out;
        out.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (size_t j = 0; j < cols_; ++j)
                acc = (acc + uint64_t(a_[i * cols_ + j]) * x[j].value()) % p;
            out.push_back(field_.element(int64_t(acc)));
        }
        return out;
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = a_[i * cols_ + j];
        return t;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    PrimeField field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

struct Echelon {
    Matrix rref;
    std::vector<size_t> pivot_cols;
    size_t rank;
};

// Gauss-Jordan to reduced row echelon form. Pivot rule: first row (lowest
// index) with a nonzero entry in the current column, so the output is
// deterministic.
inline Echelon row_reduce(Matrix m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t sel = pr;
        while (sel < rows && m.raw(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pr) m.swap_rows(sel, pr);
        m.scale_row(pr, m.at(pr, c).inverse());
        for (size_t i = 0; i < rows; ++i)
            if (i != pr) m.subtract_scaled_row(i, pr, m.at(i, c));
        pivots.push_back(c);
        ++pr;
    }
    size_t rk = pivots.size();
    return Echelon{std::move(m), std::move(pivots), rk};
}

inline size_t rank(const Matrix& m) { return row_reduce(m).rank; }

// Canonical null space basis from the RREF: one vector per free column,
// with a 1 in that column. Rows of the result are the basis vectors,
// so rank(M) + result.rows() == M.cols().
inline Matrix nullspace(const Matrix& m) {
    Echelon e = row_reduce(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;

    Matrix basis(m.field(), cols - e.rank, cols);
    size_t out = 0;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        basis.set(out, fc, m.field().one());
        for (size_t i = 0; i < e.rank; ++i) {
            FieldElement coef = e.rref.at(i, fc);
            if (!coef.is_zero()) basis.set(out, e.pivot_cols[i], -coef);
        }
        ++out;
    }
    return basis;
}

// Bit-packed GF(2) matrix. Mirrors the Matrix contract for rank and
// null space computation; results are identical to the generic path.
class BitMatrix {
  public:
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), a_(rows * words_, 0) {}

    static BitMatrix from_matrix(const Matrix& m) {
        if (m.field().modulus() != 2) throw std::invalid_argument("bit-packing requires GF(2)");
        BitMatrix b(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                if (m.raw(i, j)) b.set(i, j, true);
        return b;
    }

    Matrix to_matrix() const {
        Matrix m(PrimeField(2), rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (get(i, j)) m.set_raw(i, j, 1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words() const { return words_; }
    const uint64_t* row_data(size_t i) const { return a_.data() + i * words_; }

    bool get(size_t i, size_t j) const { return (a_[i * words_ + j / 64] >> (j % 64)) & 1; }
    void set(size_t i, size_t j, bool v) {
        uint64_t& w = a_[i * words_ + j / 64];
        uint64_t bit = uint64_t(1) << (j % 64);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }

    void xor_row(size_t dst, size_t src) {
        for (size_t w = 0; w < words_; ++w) a_[dst * words_ + w] ^= a_[src * words_ + w];
    }
    void swap_rows(size_t i, size_t j) {
        for (size_t w = 0; w < words_; ++w) std::swap(a_[i * words_ + w], a_[j * words_ + w]);
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    size_t rows_, cols_, words_;
    std::vector<uint64_t> a_;
};

struct BitEchelon {
    BitMatrix rref;
    std::vector<size_t> pivot_cols;
    size_t rank;
};

inline BitEchelon row_reduce(BitMatrix m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t sel = pr;
        while (sel < rows && !m.get(sel, c)) ++sel;
        if (sel == rows) continue;
        if (sel != pr) m.swap_rows(sel, pr);
        for (size_t i = 0; i < rows; ++i)
            if (i != pr && m.get(i, c)) m.xor_row(i, pr);
        pivots.push_back(c);
        ++pr;
    }
    size_t rk = pivots.size();
    return BitEchelon{std::move(m), std::move(pivots), rk};
}

inline size_t rank(const BitMatrix& m) { return row_reduce(m).rank; }

inline BitMatrix nullspace(const BitMatrix& m) {
    BitEchelon e = row_reduce(m);
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    BitMatrix basis(cols - e.rank, cols);
    size_t out = 0;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        basis.set(out, fc, true);
        for (size_t i = 0; i < e.rank; ++i)
            if (e.rref.get(i, fc)) basis.set(out, e.pivot_cols[i], true);
        ++out;
    }
    return basis;
}

enum class ErasureStatus { unique, ambiguous, inconsistent };

struct ErasureSolution {
    ErasureStatus status;
    std::vector<FieldElement> word;  // completed word; meaningful when status == unique
};

// Complete a word with erased positions (nullopt) to a vector in the null
// space of H, or report that the erasures are ambiguous / the known symbols
// inconsistent.
inline ErasureSolution solve_erasures(const Matrix& H,
                                      const std::vector<std::optional<FieldElement>>& word) {
    if (word.size() != H.cols()) throw std::invalid_argument("word length mismatch");
    const PrimeField& f = H.field();

    std::vector<size_t> erased;
    for (size_t j = 0; j < word.size(); ++j)
        if (!word[j].has_value()) erased.push_back(j);

    // Augmented system over the erased columns: H_E * x = -H_K * w_K.
    size_t m = H.rows(), ne = erased.size();
    Matrix sys(f, m, ne + 1);
    for (size_t i = 0; i < m; ++i) {
        for (size_t c = 0; c < ne; ++c) sys.set(i, c, H.at(i, erased[c]));
        FieldElement rhs = f.zero();
        for (size_t j = 0; j < word.size(); ++j)
            if (word[j].has_value()) rhs = rhs - H.at(i, j) * *word[j];
        sys.set(i, ne, rhs);
    }

    Echelon e = row_reduce(std::move(sys));
    for (size_t c : e.pivot_cols)
        if (c == ne) return {ErasureStatus::inconsistent, {}};
    if (e.rank < ne) return {ErasureStatus::ambiguous, {}};

    std::vector<FieldElement> out;
    out.reserve(word.size());
    for (const auto& w : word) out.push_back(w.value_or(f.zero()));
    for (size_t i = 0; i < e.rank; ++i) out[erased[e.pivot_cols[i]]] = e.rref.at(i, ne);
    return {ErasureStatus::unique, std::move(out)};
}

}  // namespace lrc
