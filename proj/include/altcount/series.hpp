#pragma once

// Truncated exact power series with normalized coefficients a_n = f(n)/D(n),
// where the denominator family D is either n! (exponential generating
// functions) or q^C(n,2) [n]_q! (Eulerian generating functions for
// complement subspaces). Normalizing makes the Eulerian product an ordinary
// Cauchy product; the explicit Gaussian-convolution form is kept as an
// independent cross-check. Constant terms are identically zero.

#include <vector>

#include "altcount/qcalc.hpp"

namespace altcount::series {

// D(n) = n! when q == 1, q^C(n,2) [n]_q! otherwise.
class DenomFamily {
public:
    static DenomFamily factorial() { return DenomFamily(1); }
    static DenomFamily eulerian(int q);

    BigNat denom(int n) const;
    int q() const { return q_; }

    bool operator==(const DenomFamily&) const = default;

private:
    explicit DenomFamily(int q) : q_(q) {}
    int q_;
};

class TruncatedSeries {
public:
    // The zero series of the given order.
    TruncatedSeries(int order, DenomFamily family);

    // a_n = values[n-1] / D(n) for n = 1..order; values.size() must be order.
    static TruncatedSeries from_counts(const std::vector<BigNat>& values, DenomFamily family);

    // Raw normalized coefficients a_1..a_order (test and internal use).
    static TruncatedSeries from_coeffs(std::vector<BigRat> coeffs, DenomFamily family);

    // Denormalized counts a_n * D(n); integrity_error if any is not a
    // nonnegative integer (a broken identity, never valid data).
    std::vector<BigNat> to_counts() const;

    // Cauchy product truncated at the common order. Orders and families must
    // match exactly; mixing is an error, not an implicit re-truncation.
    TruncatedSeries mul(const TruncatedSeries& other) const;

    // sum_{c=1}^{order} this^c / c!  (higher powers vanish: the constant
    // term is zero, so this^c has no coefficient below x^c).
    TruncatedSeries exp_compose() const;

    const BigRat& coeff(int n) const; // n in 1..order
    int order() const { return order_; }
    const DenomFamily& family() const { return family_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    int order_;
    DenomFamily family_;
    std::vector<BigRat> coeffs_; // coeffs_[i] is a_{i+1}
};

// The explicit convolution form of the product coefficient at n:
//   sum over (n_1, n_2), n_1 + n_2 = n, of
//     decomposition_count(n, (n_1, n_2), q) * f(n_1) * g(n_2).
// fvals/gvals give f(1).. and g(1)..; entries beyond n-1 are not read.
BigNat eulerian_convolve(const std::vector<BigNat>& fvals, const std::vector<BigNat>& gvals,
                         int n, int q);

// Coefficient-wise check of the exponential relation between a total count
// and its indecomposable-object count:
//   q == 1: labelled graphs vs connected labelled graphs;
//   q >= 2: non-degenerate spaces vs directly-indecomposable ones.
// Both sides are reported per n; nothing is thrown on mismatch.
struct RiddellRow {
    int n;
    BigRat lhs; // count of all objects at n
    BigRat rhs; // coefficient of exp(indecomposable-series), denormalized
    bool equal;
};

struct RiddellReport {
    int q = 1;
    int order = 0;
    std::vector<RiddellRow> rows;
    bool all_equal() const;
};

RiddellReport verify_riddell(int q, int order);

} // namespace altcount::series
