#include "altcount/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace altcount::oracle {

Subspace Subspace::from_span(FqMatrix rows) {
    const int rank = rref_in_place(rows);
    FqMatrix basis(0, rows.cols(), rows.modulus());
    for (int i = 0; i < rank; ++i)
        basis.append_row(rows.row(i));
    return Subspace(std::move(basis));
}

Subspace Subspace::zero(int m, int p) { return Subspace(FqMatrix(0, m, p)); }

Subspace Subspace::full(int m, int p) { return Subspace(FqMatrix::identity(m, p)); }

bool Subspace::contains(std::span<const std::uint8_t> v) const {
    FqMatrix probe = basis_;
    probe.append_row(v);
    return rank_of(std::move(probe)) == dim();
}

bool Subspace::operator<(const Subspace& rhs) const {
    if (dim() != rhs.dim())
        return dim() < rhs.dim();
    return basis_.bytes() < rhs.basis_.bytes();
}

namespace {

void check_enumeration_args(int m, int p) {
    if (m < 0)
        throw std::domain_error("enumerate_subspaces: negative ambient dimension");
    if (!is_supported_prime(p))
        throw std::domain_error("enumeration is implemented for prime fields {2, 3, 5} only");
}

void check_budget(const BigNat& predicted, std::uint64_t budget, const char* what) {
    if (predicted > BigNat(static_cast<unsigned long>(budget))) {
        std::ostringstream os;
        os << what << ": " << predicted << " objects exceeds the budget of " << budget;
        throw budget_error(os.str());
    }
}

// Emits every RREF basis with the given pivot columns by running an odometer
// over the free entries (row i may be nonzero at columns right of its pivot
// that are not pivots themselves).
template <typename Fn>
void emit_rref_bases(int m, int p, const std::vector<int>& pivots, Fn&& emit) {
    const int d = static_cast<int>(pivots.size());
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < d; ++i)
        for (int j = pivots[i] + 1; j < m; ++j)
            if (!std::binary_search(pivots.begin(), pivots.end(), j))
                free_cells.emplace_back(i, j);

    FqMatrix basis(d, m, p);
    for (int i = 0; i < d; ++i)
        basis.set(i, pivots[i], 1);

    std::vector<std::uint8_t> odo(free_cells.size(), 0);
    while (true) {
        emit(basis);
        std::size_t k = 0;
        for (; k < odo.size(); ++k) {
            odo[k] = static_cast<std::uint8_t>((odo[k] + 1) % p);
            basis.set(free_cells[k].first, free_cells[k].second, odo[k]);
            if (odo[k] != 0)
                break;
        }
        if (k == odo.size())
            return;
    }
}

} // namespace

std::vector<Subspace> enumerate_subspaces(int m, int p, std::uint64_t budget) {
    check_enumeration_args(m, p);
    check_budget(qcalc::galois_number(m, p), budget, "enumerate_subspaces");

    std::vector<Subspace> out;
    for (int d = 0; d <= m; ++d) {
        // pivot column sets in lexicographic order
        std::vector<int> pivots(d);
        for (int i = 0; i < d; ++i)
            pivots[i] = i;
        while (true) {
            emit_rref_bases(m, p, pivots,
                            [&](const FqMatrix& basis) { out.push_back(Subspace::from_span(basis)); });
            int i = d - 1;
            while (i >= 0 && pivots[i] == m - d + i)
                --i;
            if (i < 0)
                break;
            ++pivots[i];
            for (int j = i + 1; j < d; ++j)
                pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

std::vector<OrderedDecomposition>
enumerate_ordered_decompositions(int n, const Composition& parts, int p, std::uint64_t budget) {
    check_enumeration_args(n, p);
    if (parts.n() != n)
        throw std::invalid_argument("enumerate_ordered_decompositions: parts must sum to n");
    const BigNat predicted = qcalc::decomposition_count(n, parts, p);
    check_budget(predicted, budget, "enumerate_ordered_decompositions");

    // Candidate subspaces per needed dimension.
    const std::vector<Subspace> all = enumerate_subspaces(n, p, budget);
    std::vector<std::vector<const Subspace*>> by_dim(static_cast<std::size_t>(n) + 1);
    for (const Subspace& s : all)
        by_dim[static_cast<std::size_t>(s.dim())].push_back(&s);

    std::vector<OrderedDecomposition> out;
    std::vector<Subspace> chosen;
    FqMatrix stacked(0, n, p);

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == parts.parts().size()) {
            out.push_back(OrderedDecomposition{chosen});
            return;
        }
        const int d = parts.parts()[static_cast<std::size_t>(idx)];
        const int have = stacked.rows();
        for (const Subspace* cand : by_dim[static_cast<std::size_t>(d)]) {
            if (rank_of(stack_rows(stacked, cand->basis())) != have + d)
                continue; // not independent from what is already chosen
            FqMatrix saved = stacked;
            stacked = stack_rows(stacked, cand->basis());
            chosen.push_back(*cand);
            self(self, idx + 1);
            chosen.pop_back();
            stacked = std::move(saved);
        }
    };
    rec(rec, 0);

    if (BigNat(static_cast<unsigned long>(out.size())) != predicted)
        throw integrity_error("enumerate_ordered_decompositions: count disagrees with "
                              "decomposition_count");
    return out;
}

} // namespace altcount::oracle
