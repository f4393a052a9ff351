#pragma once

// The counting oracles: ground-truth values obtained by exhausting real
// subspaces of Lambda(n, q) over small prime fields. The pair-counting
// kernels iterate decompositions in the outer loop and count the admissible
// spaces per decomposition as the Galois number of the solution space of its
// linear conditions (the rank is computed, never assumed); the fully naive
// space-by-space double loops are kept as the slow serial reference.

#include <cstdint>
#include <map>

#include "altcount/altspace.hpp"
#include "altcount/graph_oracle.hpp"
#include "altcount/parallel.hpp"

namespace altcount::oracle {

struct OracleConfig {
    std::uint64_t subspace_budget = kDefaultSubspaceBudget;
    std::uint64_t graph_budget = std::uint64_t(1) << 21;
    int jobs = 1; // <= 1 serial, > 1 OpenMP worker count
};

// Per-dimension subspace counts of F_q^m (the census the Gaussian binomials
// are checked against).
std::map<int, BigNat> subspace_census(int m, int q, const OracleConfig& cfg = {});

// Non-degenerate spaces in Lambda(n, q): radical is zero.
BigNat oracle_nds(int n, int q, const OracleConfig& cfg = {});

// Non-degenerate and directly indecomposable.
BigNat oracle_dis(int n, int q, const OracleConfig& cfg = {});

// Pairs (space, ordered c-decomposition with every part totally isotropic).
BigNat oracle_read_q(int n, int c, int q, const OracleConfig& cfg = {});

// Pairs (space, ordered orthogonal c-decomposition).
BigNat oracle_ortho(int n, int c, int q, const OracleConfig& cfg = {});

// Slow references: enumerate every space of Lambda(n, q) against every
// decomposition and apply the definitional predicates. Serial by design.
BigNat oracle_read_q_naive(int n, int c, int q, const OracleConfig& cfg = {});
BigNat oracle_ortho_naive(int n, int c, int q, const OracleConfig& cfg = {});

} // namespace altcount::oracle
