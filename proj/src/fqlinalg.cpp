#include "altcount/fqlinalg.hpp"

#include <stdexcept>

namespace altcount::oracle {

namespace {

std::uint8_t inverse_mod(int a, int p) {
    // p <= 5, so a linear scan is fine
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1)
            return static_cast<std::uint8_t>(x);
    throw std::logic_error("inverse_mod: not invertible");
}

} // namespace

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5; }

FqMatrix::FqMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("FqMatrix: negative shape");
    if (!is_supported_prime(p))
        throw std::domain_error("FqMatrix: modulus must be one of {2, 3, 5}");
}

FqMatrix FqMatrix::identity(int n, int p) {
    FqMatrix m(n, n, p);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void FqMatrix::set(int i, int j, int value) {
    int v = value % p_;
    if (v < 0)
        v += p_;
    a_[static_cast<std::size_t>(i) * cols_ + j] = static_cast<std::uint8_t>(v);
}

std::span<const std::uint8_t> FqMatrix::row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
}

void FqMatrix::append_row(std::span<const std::uint8_t> r) {
    if (static_cast<int>(r.size()) != cols_)
        throw std::invalid_argument("append_row: width mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix t(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.set(j, i, at(i, j));
    return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw std::invalid_argument("FqMatrix::operator*: shape or modulus mismatch");
    FqMatrix out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const int aik = at(i, k);
            if (!aik)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.set(i, j, out.at(i, j) + aik * rhs.at(k, j));
        }
    return out;
}

int rref_in_place(FqMatrix& m, std::vector<int>* pivot_cols) {
    const int p = m.modulus();
    const int rows = m.rows(), cols = m.cols();
    if (pivot_cols)
        pivot_cols->clear();

    // Work on a mutable copy of the storage through set/at.
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) {
                const int tmp = m.at(rank, j);
                m.set(rank, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        const std::uint8_t inv = inverse_mod(m.at(rank, col), p);
        if (inv != 1)
            for (int j = 0; j < cols; ++j)
                m.set(rank, j, m.at(rank, j) * inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const int f = m.at(r, col);
            if (!f)
                continue;
            for (int j = 0; j < cols; ++j)
                m.set(r, j, m.at(r, j) + (p - f) * m.at(rank, j));
        }
        if (pivot_cols)
            pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

int rank_of(FqMatrix m) { return rref_in_place(m); }

FqMatrix kernel_basis(const FqMatrix& m) {
    FqMatrix red = m;
    std::vector<int> pivots;
    const int rank = rref_in_place(red, &pivots);
    const int cols = m.cols(), p = m.modulus();

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;

    FqMatrix out(0, cols, p);
    std::vector<std::uint8_t> v(static_cast<std::size_t>(cols));
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        std::fill(v.begin(), v.end(), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (int r = 0; r < rank; ++r) {
            const int entry = red.at(r, f);
            if (entry)
                v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] =
                    static_cast<std::uint8_t>((p - entry) % p);
        }
        out.append_row(v);
    }
    rref_in_place(out); // canonical basis
    return out;
}

FqMatrix stack_rows(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.cols() || a.modulus() != b.modulus())
        throw std::invalid_argument("stack_rows: width or modulus mismatch");
    FqMatrix out = a;
    for (int i = 0; i < b.rows(); ++i)
        out.append_row(b.row(i));
    return out;
}

} // namespace altcount::oracle
