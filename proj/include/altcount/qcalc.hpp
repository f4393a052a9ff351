#pragma once

// q-calculus primitives: q-integers, q-factorials, Gaussian binomials,
// Galois numbers and ordered-direct-sum-decomposition counts, all as exact
// naturals. q is a concrete integer >= 1; q = 1 gives the classical limits
// (n, n!, binomials, powers of two), so the graph case needs no second code
// path. Factorials, binomials and Galois numbers are memoized per thread.

#include <vector>

#include "altcount/bigint.hpp"

namespace altcount {

// Ordered tuple of positive integers; n() is their sum.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int n_;
};

namespace qcalc {

// [n]_q = q^{n-1} + ... + q + 1; zero when n = 0, n when q = 1.
BigNat q_int(int n, int q);

// [n]_q! = [n]_q [n-1]_q ... [1]_q; empty product is 1.
BigNat q_factorial(int n, int q);

// Number of k-dimensional subspaces of F_q^n; 0 when k < 0 or k > n.
BigNat gauss_binom(int n, int k, int q);

// Total number of subspaces of F_q^m.
BigNat galois_number(int m, int q);

// Number of ordered direct sum decompositions of F_q^n with the given part
// dimensions: q^C(n,2) [n]_q! / prod_i q^C(n_i,2) [n_i]_q!.
BigNat decomposition_count(int n, const Composition& parts, int q);

// All ordered c-tuples of positive integers summing to n, lexicographic.
// Empty when c > n.
std::vector<Composition> compositions(int n, int c);

BigNat binom(int n, int k);
BigNat factorial(int n);

// n! / prod_i n_i!; equals decomposition_count(n, parts, 1).
BigNat multinomial(int n, const Composition& parts);

} // namespace qcalc
} // namespace altcount
