#include "altcount/altspace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace altcount::oracle {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int i, int j, int n) {
    if (!(0 <= i && i < j && j < n))
        throw std::invalid_argument("pair_index: need 0 <= i < j < n");
    // row-major over the strict upper triangle
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

AltSpace make_alt_space(int n, Subspace space) {
    if (space.ambient() != pair_count(n))
        throw std::invalid_argument("make_alt_space: ambient dimension must be C(n,2)");
    return AltSpace{n, std::move(space)};
}

FqMatrix unpack_alternating(std::span<const std::uint8_t> coords, int n, int p) {
    if (static_cast<int>(coords.size()) != pair_count(n))
        throw std::invalid_argument("unpack_alternating: wrong coordinate count");
    FqMatrix a(n, n, p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int v = coords[static_cast<std::size_t>(pair_index(i, j, n))];
            a.set(i, j, v);
            a.set(j, i, p - v);
        }
    return a;
}

std::vector<std::uint8_t> pack_alternating(const FqMatrix& a) {
    const int n = a.rows(), p = a.modulus();
    if (a.cols() != n)
        throw std::invalid_argument("pack_alternating: matrix must be square");
    std::vector<std::uint8_t> coords(static_cast<std::size_t>(pair_count(n)));
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 0)
            throw std::invalid_argument("pack_alternating: nonzero diagonal");
        for (int j = i + 1; j < n; ++j) {
            if ((a.at(i, j) + a.at(j, i)) % p != 0)
                throw std::invalid_argument("pack_alternating: matrix is not alternating");
            coords[static_cast<std::size_t>(pair_index(i, j, n))] = a.at(i, j);
        }
    }
    return coords;
}

std::vector<std::uint8_t> wedge(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v,
                                int n, int p) {
    std::vector<std::uint8_t> w(static_cast<std::size_t>(pair_count(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int x = (u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
                           u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)]) % p;
            w[static_cast<std::size_t>(pair_index(i, j, n))] =
                static_cast<std::uint8_t>(x < 0 ? x + p : x);
        }
    return w;
}

AltSpace graph_to_altspace(const std::vector<std::pair<int, int>>& edges, int n, int p) {
    FqMatrix rows(0, pair_count(n), p);
    std::vector<std::uint8_t> v(static_cast<std::size_t>(pair_count(n)));
    for (auto [i, j] : edges) {
        if (i > j)
            std::swap(i, j);
        std::fill(v.begin(), v.end(), 0);
        v[static_cast<std::size_t>(pair_index(i, j, n))] = 1;
        rows.append_row(v);
    }
    return make_alt_space(n, Subspace::from_span(std::move(rows)));
}

Subspace radical(const AltSpace& a) {
    const int n = a.n, p = a.modulus();
    // Stack every basis matrix; the radical is the joint kernel.
    FqMatrix stacked(0, n, p);
    for (int b = 0; b < a.dim(); ++b) {
        const FqMatrix m = unpack_alternating(a.space.basis().row(b), n, p);
        for (int i = 0; i < n; ++i)
            stacked.append_row(m.row(i));
    }
    return Subspace::from_span(kernel_basis(stacked));
}

namespace {

// Packed coordinates of T^t A T for each basis matrix A, where T's columns
// are the basis of u. Entry (a,b) of the restricted matrix is u_a^t A u_b,
// a dot product of packed coordinates with a wedge functional.
FqMatrix restricted_rows(const AltSpace& a, const Subspace& u) {
    const int n = a.n, p = a.modulus(), d = u.dim();
    FqMatrix rows(0, pair_count(d), p);
    std::vector<std::vector<std::uint8_t>> wedges;
    wedges.reserve(static_cast<std::size_t>(pair_count(d)));
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y)
            wedges.push_back(wedge(u.basis().row(x), u.basis().row(y), n, p));

    std::vector<std::uint8_t> packed(static_cast<std::size_t>(pair_count(d)));
    for (int b = 0; b < a.dim(); ++b) {
        const auto coords = a.space.basis().row(b);
        for (std::size_t k = 0; k < wedges.size(); ++k) {
            int acc = 0;
            for (std::size_t t = 0; t < coords.size(); ++t)
                acc += coords[t] * wedges[k][t];
            packed[k] = static_cast<std::uint8_t>(acc % p);
        }
        rows.append_row(packed);
    }
    return rows;
}

FqMatrix pair_conditions(const OrderedDecomposition& d, int n, bool cross_pairs) {
    if (d.parts.empty())
        throw std::invalid_argument("pair_conditions: empty decomposition");
    const int p = d.parts.front().modulus();
    FqMatrix rows(0, pair_count(n), p);
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const FqMatrix& bi = d.parts[i].basis();
        if (cross_pairs) {
            for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
                const FqMatrix& bj = d.parts[j].basis();
                for (int x = 0; x < bi.rows(); ++x)
                    for (int y = 0; y < bj.rows(); ++y)
                        rows.append_row(wedge(bi.row(x), bj.row(y), n, p));
            }
        } else {
            for (int x = 0; x < bi.rows(); ++x)
                for (int y = x + 1; y < bi.rows(); ++y)
                    rows.append_row(wedge(bi.row(x), bi.row(y), n, p));
        }
    }
    return rows;
}

} // namespace

int restriction_dim(const AltSpace& a, const Subspace& u) {
    return rank_of(restricted_rows(a, u));
}

AltSpace restriction(const AltSpace& a, const Subspace& u) {
    return make_alt_space(u.dim(), Subspace::from_span(restricted_rows(a, u)));
}

bool is_totally_isotropic(const AltSpace& a, const Subspace& u) {
    const int n = a.n, p = a.modulus();
    // Definitional check: every bilinear evaluation on basis vectors.
    for (int b = 0; b < a.dim(); ++b) {
        const FqMatrix m = unpack_alternating(a.space.basis().row(b), n, p);
        for (int x = 0; x < u.dim(); ++x)
            for (int y = 0; y < u.dim(); ++y) {
                int acc = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        acc += u.basis().at(x, i) * m.at(i, j) * u.basis().at(y, j);
                if (acc % p != 0)
                    return false;
            }
    }
    return true;
}

bool is_orthogonal_decomposition(const AltSpace& a, const OrderedDecomposition& d) {
    const FqMatrix conditions = pair_conditions(d, a.n, /*cross_pairs=*/true);
    for (int b = 0; b < a.dim(); ++b) {
        const auto coords = a.space.basis().row(b);
        for (int r = 0; r < conditions.rows(); ++r) {
            int acc = 0;
            for (std::size_t t = 0; t < coords.size(); ++t)
                acc += coords[t] * conditions.at(r, static_cast<int>(t));
            if (acc % a.modulus() != 0)
                return false;
        }
    }
    return true;
}

bool is_direct_decomposition(const AltSpace& a, const OrderedDecomposition& d) {
    if (!is_orthogonal_decomposition(a, d))
        return false;
    int total = 0;
    for (const Subspace& u : d.parts)
        total += restriction_dim(a, u);
    return total == a.dim();
}

FqMatrix isotropy_conditions(const OrderedDecomposition& d, int n) {
    return pair_conditions(d, n, /*cross_pairs=*/false);
}

FqMatrix orthogonality_conditions(const OrderedDecomposition& d, int n) {
    return pair_conditions(d, n, /*cross_pairs=*/true);
}

DirectDecompositionChecker::DirectDecompositionChecker(int n, int p, std::uint64_t budget,
                                                       bool with_census_tables)
    : n_(n), p_(p), census_(with_census_tables) {
    two_part_by_dim_.resize(static_cast<std::size_t>(n) + 1);
    for (int d = 2; d <= n; ++d)
        for (int k = 1; k < d; ++k) {
            auto decs = enumerate_ordered_decompositions(d, Composition({k, d - k}), p, budget);
            auto& dst = two_part_by_dim_[static_cast<std::size_t>(d)];
            dst.insert(dst.end(), std::make_move_iterator(decs.begin()),
                       std::make_move_iterator(decs.end()));
        }

    if (census_) {
        std::set<std::vector<Subspace>> seen;
        for (int c = 1; c <= n; ++c)
            for (const Composition& parts : qcalc::compositions(n, c))
                for (auto& dec : enumerate_ordered_decompositions(n, parts, p, budget)) {
                    std::vector<Subspace> key = dec.parts;
                    std::sort(key.begin(), key.end());
                    if (seen.insert(key).second)
                        unordered_.push_back(OrderedDecomposition{std::move(key)});
                }
    }
}

bool DirectDecompositionChecker::is_directly_indecomposable(const AltSpace& a) const {
    if (a.modulus() != p_ || a.n > n_)
        throw std::invalid_argument("is_directly_indecomposable: space outside checker range");
    for (const OrderedDecomposition& dec : two_part_by_dim_[static_cast<std::size_t>(a.n)])
        if (is_direct_decomposition(a, dec))
            return false;
    return true;
}

const std::vector<OrderedDecomposition>& DirectDecompositionChecker::unordered_decompositions() const {
    if (!census_)
        throw std::logic_error("checker was built without census tables");
    return unordered_;
}

std::uint64_t
DirectDecompositionChecker::count_complete_direct_decompositions(const AltSpace& a) const {
    if (!census_)
        throw std::logic_error("checker was built without census tables");
    // Restriction indecomposability is a pure function of the restricted
    // space, so the memo can be global; thread_local keeps it contention-free.
    thread_local std::map<std::tuple<int, int, std::vector<std::uint8_t>>, bool> memo;

    std::uint64_t complete = 0;
    for (const OrderedDecomposition& dec : unordered_) {
        if (!is_direct_decomposition(a, dec))
            continue;
        bool all_parts_indecomposable = true;
        for (const Subspace& u : dec.parts) {
            if (u.dim() < 2)
                continue; // Lambda(d,q) is trivial below d = 2
            const AltSpace res = restriction(a, u);
            auto key = std::tuple{p_, res.n, res.space.basis().bytes()};
            auto it = memo.find(key);
            bool indec;
            if (it != memo.end()) {
                indec = it->second;
            } else {
                indec = is_directly_indecomposable(res);
                memo.emplace(std::move(key), indec);
            }
            if (!indec) {
                all_parts_indecomposable = false;
                break;
            }
        }
        if (all_parts_indecomposable)
            ++complete;
    }
    return complete;
}

bool is_directly_indecomposable(const AltSpace& a, std::uint64_t budget) {
    return DirectDecompositionChecker(a.n, a.modulus(), budget).is_directly_indecomposable(a);
}

} // namespace altcount::oracle
