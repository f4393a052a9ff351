#include "altcount/series.hpp"

#include "altcount/formulas.hpp"

namespace altcount::series {

DenomFamily DenomFamily::eulerian(int q) {
    if (q < 1)
        throw std::domain_error("DenomFamily: q must be positive");
    return DenomFamily(q);
}

BigNat DenomFamily::denom(int n) const {
    return pow_nat(q_, n * (n - 1) / 2) * qcalc::q_factorial(n, q_);
}

TruncatedSeries::TruncatedSeries(int order, DenomFamily family)
    : order_(order), family_(family), coeffs_(static_cast<std::size_t>(order)) {
    if (order < 1)
        throw std::domain_error("TruncatedSeries: order must be at least 1");
}

TruncatedSeries TruncatedSeries::from_counts(const std::vector<BigNat>& values,
                                             DenomFamily family) {
    TruncatedSeries s(static_cast<int>(values.size()), family);
    for (int n = 1; n <= s.order_; ++n) {
        s.coeffs_[n - 1] = BigRat(values[n - 1]) / BigRat(family.denom(n));
        s.coeffs_[n - 1].canonicalize();
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<BigRat> coeffs, DenomFamily family) {
    TruncatedSeries s(static_cast<int>(coeffs.size()), family);
    s.coeffs_ = std::move(coeffs);
    for (auto& c : s.coeffs_)
        c.canonicalize();
    return s;
}

std::vector<BigNat> TruncatedSeries::to_counts() const {
    std::vector<BigNat> out;
    out.reserve(coeffs_.size());
    for (int n = 1; n <= order_; ++n) {
        BigRat v = coeffs_[n - 1] * BigRat(family_.denom(n));
        v.canonicalize();
        BigNat c = rat_to_nat(v, "to_counts");
        if (c < 0)
            throw integrity_error("to_counts: negative count");
        out.push_back(c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("mul: mixed truncation orders");
    if (!(family_ == other.family_))
        throw std::invalid_argument("mul: mixed denominator families");
    TruncatedSeries out(order_, family_);
    for (int i = 1; i <= order_; ++i) {
        if (coeffs_[i - 1] == 0)
            continue;
        for (int j = 1; i + j <= order_; ++j)
            out.coeffs_[i + j - 1] += coeffs_[i - 1] * other.coeffs_[j - 1];
    }
    for (auto& c : out.coeffs_)
        c.canonicalize();
    return out;
}

TruncatedSeries TruncatedSeries::exp_compose() const {
    TruncatedSeries acc = *this; // c = 1 term
    TruncatedSeries power = *this;
    BigRat inv_fact(1);
    for (int c = 2; c <= order_; ++c) {
        power = power.mul(*this);
        inv_fact /= c;
        for (int n = 1; n <= order_; ++n)
            acc.coeffs_[n - 1] += power.coeffs_[n - 1] * inv_fact;
    }
    for (auto& c : acc.coeffs_)
        c.canonicalize();
    return acc;
}

const BigRat& TruncatedSeries::coeff(int n) const {
    if (n < 1 || n > order_)
        throw std::out_of_range("TruncatedSeries::coeff");
    return coeffs_[n - 1];
}

BigNat eulerian_convolve(const std::vector<BigNat>& fvals, const std::vector<BigNat>& gvals,
                         int n, int q) {
    BigNat acc = 0;
    for (int k = 1; k <= n - 1; ++k) {
        const BigNat& f = fvals[k - 1];
        const BigNat& g = gvals[n - k - 1];
        if (f == 0 || g == 0)
            continue;
        acc += qcalc::decomposition_count(n, Composition({k, n - k}), q) * f * g;
    }
    return acc;
}

bool RiddellReport::all_equal() const {
    for (const auto& r : rows)
        if (!r.equal)
            return false;
    return true;
}

RiddellReport verify_riddell(int q, int order) {
    if (q < 1 || order < 1)
        throw std::domain_error("verify_riddell: need q >= 1 and order >= 1");
    const DenomFamily family =
        q == 1 ? DenomFamily::factorial() : DenomFamily::eulerian(q);

    std::vector<BigNat> totals, indec;
    for (int n = 1; n <= order; ++n) {
        if (q == 1) {
            totals.push_back(formulas::graph_count(n));
            indec.push_back(formulas::connected_graphs(n));
        } else {
            totals.push_back(formulas::nds(n, q));
            indec.push_back(formulas::dis(n, q));
        }
    }

    const TruncatedSeries composed = TruncatedSeries::from_counts(indec, family).exp_compose();

    RiddellReport report;
    report.q = q;
    report.order = order;
    for (int n = 1; n <= order; ++n) {
        RiddellRow row;
        row.n = n;
        row.lhs = BigRat(totals[n - 1]);
        row.rhs = composed.coeff(n) * BigRat(family.denom(n));
        row.rhs.canonicalize();
        row.equal = row.lhs == row.rhs;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace altcount::series
