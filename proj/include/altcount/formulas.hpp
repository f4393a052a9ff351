#pragma once

// Closed-form and recursive counting formulas for labelled graphs and for
// alternating matrix spaces in Lambda(n, q): totals, colored/isotropic and
// orthogonal decomposition pair counts, connected / non-degenerate /
// directly-indecomposable counts, and their rooted variants. The graph
// formulas are the q = 1 specializations of the space formulas wherever both
// exist, and every recursion is built bottom-up on memoized tables.

#include <optional>
#include <string>
#include <vector>

#include "altcount/qcalc.hpp"

namespace altcount::formulas {

// 2^C(n,2), the number of labelled graphs on n vertices.
BigNat graph_count(int n);

// Number of alternating matrix spaces in Lambda(n, q): the Galois number of
// the C(n,2)-dimensional coordinate space.
BigNat space_count(int n, int q);

// Pairs (graph, ordered partition of the vertices into c nonempty
// independent sets).
BigNat read_colored(int n, int c);

// Pairs (space, ordered direct sum decomposition into c totally-isotropic
// subspaces). Evaluated through two algebraically equal summations whose
// agreement is checked on every call.
BigNat read_q_isotropic(int n, int c, int q);

// Pairs (space, ordered orthogonal c-decomposition).
BigNat ortho_q(int n, int c, int q);

// Connected labelled graphs on n >= 1 vertices (Gilbert recursion; the
// division by n is checked exact).
BigNat connected_graphs(int n);

// Labelled graphs without isolated vertices (binomial inversion of 2^C(n,2)).
BigNat no_isolated_graphs(int n);

// Non-degenerate spaces in Lambda(n, q) (Gaussian-binomial inversion of
// space_count). nds(n, 1) recovers no_isolated_graphs(n).
BigNat nds(int n, int q);

// Directly-indecomposable non-degenerate spaces in Lambda(n, q), n >= 2
// (0 for n < 2). Computed by inverting the exponential relation between the
// non-degenerate and indecomposable counts: for every c >= 2 the c-part
// complete direct decompositions contribute (1/c!) sum decomposition_count *
// prod dis(n_i); uniqueness of complete direct decompositions makes this
// exact, and the c! divisions are checked. dis(n, 1) counts connected graphs
// without isolated vertices.
BigNat dis(int n, int q);

// The rooted-count recursion for the same quantity:
//   dis = nds - (1/[n]_q) sum_{k=2}^{n-1} [k]_q gauss(n,k,q) q^{k(n-k)}
//                                         dis(k) nds(n-k).
// Its derivation assumes every nonzero root vector lies inside a single
// summand of the complete direct decomposition. That holds at q = 1 (a
// vertex lies in exactly one component), so it agrees with dis() there, but
// for q >= 2 a root can straddle summands and the recursion undercounts the
// rooted spaces, diverging from the true count from n = 4 on. Kept because
// its division by [n]_q is exact regardless, which is tested.
BigNat dis_rooted_recursion(int n, int q);

// Rooted counts: rg(n) = n * graph_count(n);  rs(n, q) = (q^n - 1) * nds(n, q).
BigNat rg(int n);
BigNat rs(int n, int q);

// ordered_count / c!, checked exact (the parts of a decomposition are
// pairwise distinct, so each unordered object is hit exactly c! times).
BigNat unordered_variant(const BigNat& ordered_count, int c);

// A contiguous run of values of one formula, for reporting.
struct SequenceTable {
    std::string name;
    std::optional<int> q;
    std::optional<int> c;
    int n_min = 0;
    std::vector<BigNat> values; // values[i] is the value at n = n_min + i
};

// formula_id is one of: graphs, spaces, connected, no-isolated, nds, dis,
// read, read-q, ortho-q, rooted. Throws std::invalid_argument on an unknown
// id or a missing parameter.
SequenceTable sequence_table(const std::string& formula_id, int n_max,
                             std::optional<int> q, std::optional<int> c);

} // namespace altcount::formulas
