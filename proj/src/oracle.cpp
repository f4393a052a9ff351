#include "altcount/oracle.hpp"

#include "altcount/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altcount::oracle {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0)
        return omp_get_max_threads();
    return jobs;
#else
    (void)jobs;
    return 1;
#endif
}

namespace {

std::vector<OrderedDecomposition> all_decompositions(int n, int c, int q,
                                                     const OracleConfig& cfg) {
    std::vector<OrderedDecomposition> decs;
    for (const Composition& parts : qcalc::compositions(n, c))
        for (auto& d : enumerate_ordered_decompositions(n, parts, q, cfg.subspace_budget))
            decs.push_back(std::move(d));
    return decs;
}

} // namespace

std::map<int, BigNat> subspace_census(int m, int q, const OracleConfig& cfg) {
    const auto spaces = enumerate_subspaces(m, q, cfg.subspace_budget);
    std::map<int, BigNat> counts;
    for (int d = 0; d <= m; ++d)
        counts[d] = 0;
    for (const Subspace& s : spaces)
        counts[s.dim()] += 1;
    return counts;
}

BigNat oracle_nds(int n, int q, const OracleConfig& cfg) {
    const auto spaces = enumerate_subspaces(pair_count(n), q, cfg.subspace_budget);
    return parallel_sum(spaces.size(), cfg.jobs, [&](std::size_t i) {
        const AltSpace a = make_alt_space(n, spaces[i]);
        return BigNat(radical(a).dim() == 0 ? 1 : 0);
    });
}

BigNat oracle_dis(int n, int q, const OracleConfig& cfg) {
    const auto spaces = enumerate_subspaces(pair_count(n), q, cfg.subspace_budget);
    const DirectDecompositionChecker checker(n, q, cfg.subspace_budget);
    return parallel_sum(spaces.size(), cfg.jobs, [&](std::size_t i) {
        const AltSpace a = make_alt_space(n, spaces[i]);
        if (radical(a).dim() != 0)
            return BigNat(0);
        return BigNat(checker.is_directly_indecomposable(a) ? 1 : 0);
    });
}

BigNat oracle_read_q(int n, int c, int q, const OracleConfig& cfg) {
    const auto decs = all_decompositions(n, c, q, cfg);
    const int coords = pair_count(n);
    return parallel_sum(decs.size(), cfg.jobs, [&](std::size_t i) {
        // Spaces for which every part is totally isotropic form the kernel of
        // the isotropy conditions; each of its subspaces is one pair.
        const int r = rank_of(isotropy_conditions(decs[i], n));
        return qcalc::galois_number(coords - r, q);
    });
}

BigNat oracle_ortho(int n, int c, int q, const OracleConfig& cfg) {
    const auto decs = all_decompositions(n, c, q, cfg);
    const int coords = pair_count(n);
    return parallel_sum(decs.size(), cfg.jobs, [&](std::size_t i) {
        const int r = rank_of(orthogonality_conditions(decs[i], n));
        return qcalc::galois_number(coords - r, q);
    });
}

BigNat oracle_read_q_naive(int n, int c, int q, const OracleConfig& cfg) {
    const auto decs = all_decompositions(n, c, q, cfg);
    const auto spaces = enumerate_subspaces(pair_count(n), q, cfg.subspace_budget);
    BigNat total = 0;
    for (const Subspace& s : spaces) {
        const AltSpace a = make_alt_space(n, s);
        for (const OrderedDecomposition& dec : decs) {
            bool all_isotropic = true;
            for (const Subspace& u : dec.parts)
                if (!is_totally_isotropic(a, u)) {
                    all_isotropic = false;
                    break;
                }
            if (all_isotropic)
                total += 1;
        }
    }
    return total;
}

BigNat oracle_ortho_naive(int n, int c, int q, const OracleConfig& cfg) {
    const auto decs = all_decompositions(n, c, q, cfg);
    const auto spaces = enumerate_subspaces(pair_count(n), q, cfg.subspace_budget);
    BigNat total = 0;
    for (const Subspace& s : spaces) {
        const AltSpace a = make_alt_space(n, s);
        for (const OrderedDecomposition& dec : decs)
            if (is_orthogonal_decomposition(a, dec))
                total += 1;
    }
    return total;
}

} // namespace altcount::oracle
