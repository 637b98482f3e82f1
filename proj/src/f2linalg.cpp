#include <kocalc/f2linalg.hpp>

#include <algorithm>
#include <bit>
#include <cassert>

namespace kocalc {

F2Vector& F2Vector::operator^=(const F2Vector& other)
{
    assert(size_ == other.size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool F2Vector::is_zero() const
{
    for (std::uint64_t w : words_)
        if (w)
            return false;
    return true;
}

int F2Vector::first_set() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return int(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

std::size_t F2Vector::popcount() const
{
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

bool F2Vector::dot(const F2Vector& other) const
{
    assert(size_ == other.size_);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1u;
}

bool F2Matrix::is_zero() const
{
    for (const F2Vector& r : data_)
        if (!r.is_zero())
            return false;
    return true;
}

F2Vector F2Matrix::apply(const F2Vector& v) const
{
    assert(v.size() == cols_);
    F2Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v))
            out.set(r);
    return out;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
{
    assert(a.cols_ == b.rows_);
    F2Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        const F2Vector& row = a.data_[r];
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (row.get(k))
                out.data_[r] ^= b.data_[k];
    }
    return out;
}

F2Vector EchelonBasis::reduce(F2Vector v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool EchelonBasis::insert(F2Vector v)
{
    v = reduce(std::move(v));
    int p = v.first_set();
    if (p < 0)
        return false;
    /* keep existing rows reduced against the new pivot */
    for (F2Vector& row : rows_)
        if (row.get(std::size_t(p)))
            row ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), std::size_t(p));
    std::size_t idx = std::size_t(pos - pivots_.begin());
    pivots_.insert(pos, std::size_t(p));
    rows_.insert(rows_.begin() + long(idx), std::move(v));
    return true;
}

bool EchelonBasis::is_pivot(std::size_t col) const
{
    return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

EchelonForm row_echelon(const F2Matrix& m)
{
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(m.row(r));
    EchelonForm out;
    out.matrix = F2Matrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.matrix.set_row(i, basis.rows()[i]);
    out.pivots = basis.pivots();
    return out;
}

std::size_t rank(const F2Matrix& m)
{
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(m.row(r));
    return basis.size();
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m)
{
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(m.row(r));

    /* one kernel vector per free column: 1 there, echelon entries at the pivots */
    std::vector<F2Vector> raw;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (basis.is_pivot(c))
            continue;
        F2Vector v(m.cols());
        v.set(c);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis.rows()[i].get(c))
                v.flip(basis.pivots()[i]);
        raw.push_back(std::move(v));
    }

    /* canonicalize */
    EchelonBasis canon(m.cols());
    for (F2Vector& v : raw)
        canon.insert(std::move(v));
    return canon.rows();
}

} // namespace kocalc
