#pragma once

// Alternating matrix spaces: subspaces of Lambda(n, q) stored in the
// C(n,2)-dimensional coordinate space of strictly-upper-triangular entries
// (row-major). Over F_2 "alternating" means symmetric with zero diagonal,
// which the packed representation enforces by construction. Provides the
// structural predicates the enumeration formulas are verified against:
// radicals, restrictions, total isotropy, orthogonal/direct decompositions
// and direct indecomposability.

#include <cstdint>
#include <utility>
#include <vector>

#include "altcount/subspace.hpp"

namespace altcount::oracle {

int pair_count(int n);                 // C(n,2)
int pair_index(int i, int j, int n);   // position of (i, j), i < j

struct AltSpace {
    int n = 0;       // matrix size
    Subspace space;  // subspace of F_p^{C(n,2)}

    int dim() const { return space.dim(); }
    int modulus() const { return space.modulus(); }
};

// Validates that the ambient dimension is C(n,2).
AltSpace make_alt_space(int n, Subspace space);

// Packed coordinates -> full n x n alternating matrix and back. Packing
// rejects matrices that are not alternating.
FqMatrix unpack_alternating(std::span<const std::uint8_t> coords, int n, int p);
std::vector<std::uint8_t> pack_alternating(const FqMatrix& a);

// Coordinates of u v^t - v u^t, the elementary alternating matrix spanned by
// two vectors. As a row vector it is also the linear functional
// A |-> u^t A v on packed coordinates; both readings are used.
std::vector<std::uint8_t> wedge(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v,
                                int n, int p);

// Span of the elementary matrices of the edges (0-based endpoints).
AltSpace graph_to_altspace(const std::vector<std::pair<int, int>>& edges, int n, int p);

// {v : A v = 0 for all A in the space}; the space is degenerate iff nonzero.
Subspace radical(const AltSpace& a);

// dim of {T^t A T : A in the space} where T's columns span u; independent of
// the choice of basis for u.
int restriction_dim(const AltSpace& a, const Subspace& u);

// The restricted space itself, living in Lambda(dim u, p).
AltSpace restriction(const AltSpace& a, const Subspace& u);

// u^t A u' = 0 for all u, u' in the subspace and all A in the space.
bool is_totally_isotropic(const AltSpace& a, const Subspace& u);

// Cross pairs annihilate: u_i^t A u_j = 0 for i != j. A direct decomposition
// additionally has dim(space) equal to the sum of the restriction dims.
bool is_orthogonal_decomposition(const AltSpace& a, const OrderedDecomposition& d);
bool is_direct_decomposition(const AltSpace& a, const OrderedDecomposition& d);

// Condition matrices on packed coordinates: each row is one wedge functional.
// Isotropy takes all pairs inside each part, orthogonality all cross pairs.
FqMatrix isotropy_conditions(const OrderedDecomposition& d, int n);
FqMatrix orthogonality_conditions(const OrderedDecomposition& d, int n);

// Precomputed decomposition tables for Lambda(n, p): two-part decompositions
// of F_p^d for every d <= n (a k-part direct decomposition groups into a
// two-part one, so two parts suffice for indecomposability; validated
// against the exhaustive k-part search in the tests) and, when requested,
// every unordered decomposition of F_p^n for complete-decomposition
// censuses. Immutable after construction, safe to share across threads.
class DirectDecompositionChecker {
public:
    DirectDecompositionChecker(int n, int p, std::uint64_t budget = kDefaultSubspaceBudget,
                               bool with_census_tables = false);

    // `a` may live in Lambda(d, p) for any d <= n (restrictions do).
    bool is_directly_indecomposable(const AltSpace& a) const;

    // Unordered direct-sum decompositions of F_p^n, sorted parts, including
    // the one-part decomposition. Requires with_census_tables.
    const std::vector<OrderedDecomposition>& unordered_decompositions() const;

    // Number of direct decompositions of `a` (over the unordered list) whose
    // every part restricts to a directly-indecomposable space. For a
    // non-degenerate space this is 1 exactly when the complete direct
    // decomposition is unique. Requires with_census_tables.
    std::uint64_t count_complete_direct_decompositions(const AltSpace& a) const;

    int n() const { return n_; }
    int modulus() const { return p_; }

private:
    int n_, p_;
    std::vector<std::vector<OrderedDecomposition>> two_part_by_dim_;
    std::vector<OrderedDecomposition> unordered_;
    bool census_ = false;
};

// Convenience wrapper building a throwaway checker.
bool is_directly_indecomposable(const AltSpace& a,
                                std::uint64_t budget = kDefaultSubspaceBudget);

} // namespace altcount::oracle
