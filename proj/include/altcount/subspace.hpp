#pragma once

// Subspaces of F_p^m, canonically represented by a reduced-row-echelon
// basis, plus the exhaustive enumerations the counting oracles are built on:
// every subspace exactly once (choose pivot columns, fill free entries) and
// every ordered direct sum decomposition with prescribed part dimensions.

#include <cstdint>
#include <vector>

#include "altcount/fqlinalg.hpp"
#include "altcount/qcalc.hpp"

namespace altcount::oracle {

inline constexpr std::uint64_t kDefaultSubspaceBudget = 1'000'000;

class Subspace {
public:
    // Canonicalizes: row-reduces and drops zero rows.
    static Subspace from_span(FqMatrix rows);
    static Subspace zero(int m, int p);
    static Subspace full(int m, int p);

    const FqMatrix& basis() const { return basis_; } // dim x ambient, RREF
    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    int modulus() const { return basis_.modulus(); }

    bool contains(std::span<const std::uint8_t> v) const;

    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& rhs) const; // (dim, basis bytes) order

private:
    explicit Subspace(FqMatrix basis) : basis_(std::move(basis)) {}
    FqMatrix basis_;
};

// Every subspace of F_p^m exactly once, grouped by ascending dimension.
// Throws budget_error when the subspace total exceeds the budget and
// std::domain_error for unsupported moduli.
std::vector<Subspace> enumerate_subspaces(int m, int p,
                                          std::uint64_t budget = kDefaultSubspaceBudget);

// Ordered tuples (U_1, ..., U_c) of nonzero subspaces of F_p^n that are
// independent and jointly spanning, with dim U_i = parts[i].
struct OrderedDecomposition {
    std::vector<Subspace> parts;
};

// All such tuples, exactly once each. The result size is checked against
// decomposition_count and the predicted size against the budget.
std::vector<OrderedDecomposition>
enumerate_ordered_decompositions(int n, const Composition& parts, int p,
                                 std::uint64_t budget = kDefaultSubspaceBudget);

} // namespace altcount::oracle
