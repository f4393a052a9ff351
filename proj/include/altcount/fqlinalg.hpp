#pragma once

// Dense linear algebra over the prime fields F_2, F_3, F_5: row reduction,
// rank, kernels. Entries are residues stored in bytes; reduced row echelon
// form is the canonical representation everywhere downstream.

#include <cstdint>
#include <span>
#include <vector>

#include "altcount/errors.hpp"

namespace altcount::oracle {

bool is_supported_prime(int p); // {2, 3, 5}

class FqMatrix {
public:
    FqMatrix(int rows, int cols, int p);

    static FqMatrix identity(int n, int p);

    std::uint8_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, int value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return p_; }

    std::span<const std::uint8_t> row(int i) const;
    void append_row(std::span<const std::uint8_t> r);

    FqMatrix transposed() const;
    FqMatrix operator*(const FqMatrix& rhs) const;

    bool operator==(const FqMatrix&) const = default;

    // Raw row-major bytes; used as a canonical map key after row reduction.
    const std::vector<std::uint8_t>& bytes() const { return a_; }

private:
    int rows_, cols_, p_;
    std::vector<std::uint8_t> a_;
};

// In-place reduced row echelon form. Returns the rank; optionally reports
// the pivot columns. Zero rows sink to the bottom.
int rref_in_place(FqMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank_of(FqMatrix m);

// Basis of {x : m x = 0} as the rows of an RREF matrix (possibly 0 rows).
FqMatrix kernel_basis(const FqMatrix& m);

// a on top of b; column counts and moduli must match.
FqMatrix stack_rows(const FqMatrix& a, const FqMatrix& b);

} // namespace altcount::oracle
