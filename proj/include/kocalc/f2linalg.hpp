#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kocalc {

/* Dense GF(2) vector, bit-packed into 64-bit words. Addition is XOR. */
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value = true)
    {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    F2Vector& operator^=(const F2Vector& other);

    bool is_zero() const;

    /* Index of the lowest set bit, or -1 for the zero vector. */
    int first_set() const;

    std::size_t popcount() const;

    /* Inner product over GF(2). */
    bool dot(const F2Vector& other) const;

    friend bool operator==(const F2Vector&, const F2Vector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/* Dense row-major bit-packed matrix over GF(2). */
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, F2Vector(cols))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

    const F2Vector& row(std::size_t r) const { return data_[r]; }
    void set_row(std::size_t r, F2Vector v) { data_[r] = std::move(v); }
    void xor_row(std::size_t dst, std::size_t src) { data_[dst] ^= data_[src]; }

    bool is_zero() const;

    /* Matrix times column vector. */
    F2Vector apply(const F2Vector& v) const;

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vector> data_;
};

struct EchelonForm {
    F2Matrix matrix;                  /* reduced row echelon form, zero rows at the bottom */
    std::vector<std::size_t> pivots;  /* pivot column of each nonzero row, strictly increasing */
};

/* Reduced row echelon form with leftmost pivot selection. */
EchelonForm row_echelon(const F2Matrix& m);

std::size_t rank(const F2Matrix& m);

/* Canonical basis of the right kernel: the rows of the reduced echelon form of
 * the standard kernel vectors.  Size is cols - rank. */
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

/* Incrementally maintained reduced echelon basis of a subspace of GF(2)^n.
 * Shared by the slice reduction in graded_algebra and by the representative
 * selection in dga_cohomology. */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<F2Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /* Reduce v against the current basis. */
    F2Vector reduce(F2Vector v) const;

    /* Reduce v and, if independent, insert it (keeping the basis reduced).
     * Returns true if the vector enlarged the span. */
    bool insert(F2Vector v);

    bool is_pivot(std::size_t col) const;

private:
    std::size_t cols_;
    std::vector<F2Vector> rows_;          /* sorted by pivot column */
    std::vector<std::size_t> pivots_;
};

} // namespace kocalc
