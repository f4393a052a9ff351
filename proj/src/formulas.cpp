#include "altcount/formulas.hpp"

#include <map>
#include <sstream>

namespace altcount::formulas {

using qcalc::binom;
using qcalc::compositions;
using qcalc::decomposition_count;
using qcalc::factorial;
using qcalc::galois_number;
using qcalc::gauss_binom;
using qcalc::multinomial;
using qcalc::q_factorial;
using qcalc::q_int;

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

void check_n(int n, const char* what) {
    if (n < 0)
        throw std::domain_error(std::string(what) + ": n must be nonnegative");
}

void check_c(int c) {
    if (c < 1)
        throw std::domain_error("c must be at least 1");
}

// Bottom-up tables, one per q, extended on demand. Thread-local so the
// tables are immutable from the point of view of any other thread.
using Table = std::vector<BigNat>;

const Table& cg_table(int n_max) {
    thread_local Table t;
    if (t.empty())
        t = {BigNat(0), BigNat(1)}; // CG_1 = 1; index 0 unused
    for (int n = static_cast<int>(t.size()); n <= n_max; ++n) {
        BigNat s = 0;
        for (int k = 1; k < n; ++k)
            s += k * binom(n, k) * t[k] * graph_count(n - k);
        t.push_back(graph_count(n) - exact_div(s, n, "connected_graphs"));
    }
    return t;
}

const Table& ndg_table(int n_max) {
    thread_local Table t;
    if (t.empty())
        t = {BigNat(1)}; // NDG_0 = 1
    for (int n = static_cast<int>(t.size()); n <= n_max; ++n) {
        BigNat s = 0;
        for (int k = 0; k < n; ++k)
            s += binom(n, k) * t[k];
        t.push_back(graph_count(n) - s);
    }
    return t;
}

const Table& nds_table(int n_max, int q) {
    thread_local std::map<int, Table> per_q;
    Table& t = per_q[q];
    if (t.empty())
        t = {BigNat(1)}; // the empty space is non-degenerate
    for (int n = static_cast<int>(t.size()); n <= n_max; ++n) {
        BigNat s = 0;
        for (int k = 0; k < n; ++k)
            s += gauss_binom(n, k, q) * t[k];
        t.push_back(space_count(n, q) - s);
    }
    return t;
}

const Table& dis_table(int n_max, int q) {
    thread_local std::map<int, Table> per_q;
    Table& t = per_q[q];
    if (t.empty())
        t = {BigNat(0), BigNat(0)}; // no indecomposable space below dimension 2
    for (int n = static_cast<int>(t.size()); n <= n_max; ++n) {
        BigNat composed = 0;
        for (int c = 2; c <= n; ++c) {
            BigNat s = 0;
            for (const Composition& parts : compositions(n, c)) {
                BigNat term = decomposition_count(n, parts, q);
                for (int p : parts.parts())
                    term *= t[p];
                s += term;
            }
            composed += exact_div(s, factorial(c), "dis");
        }
        t.push_back(nds(n, q) - composed);
    }
    return t;
}

const Table& dis_rooted_table(int n_max, int q) {
    thread_local std::map<int, Table> per_q;
    Table& t = per_q[q];
    if (t.empty())
        t = {BigNat(0), BigNat(0)};
    for (int n = static_cast<int>(t.size()); n <= n_max; ++n) {
        BigNat s = 0;
        for (int k = 2; k < n; ++k)
            s += q_int(k, q) * gauss_binom(n, k, q) * pow_nat(q, k * (n - k)) * t[k] *
                 nds(n - k, q);
        t.push_back(nds(n, q) - exact_div(s, q_int(n, q), "dis_rooted_recursion"));
    }
    return t;
}

} // namespace

BigNat graph_count(int n) {
    check_n(n, "graph_count");
    return pow_nat(2, choose2(n));
}

BigNat space_count(int n, int q) {
    check_n(n, "space_count");
    return galois_number(choose2(n), q);
}

BigNat read_colored(int n, int c) {
    check_n(n, "read_colored");
    check_c(c);
    BigNat acc = 0;
    for (const Composition& parts : compositions(n, c)) {
        int inner = 0;
        for (int p : parts.parts())
            inner += choose2(p);
        acc += multinomial(n, parts) * pow_nat(2, choose2(n) - inner);
    }
    return acc;
}

BigNat read_q_isotropic(int n, int c, int q) {
    check_n(n, "read_q_isotropic");
    check_c(c);
    BigNat via_decompositions = 0;
    BigNat via_q_multinomial = 0;
    for (const Composition& parts : compositions(n, c)) {
        int inner = 0;
        BigNat q_fact_den = 1;
        for (int p : parts.parts()) {
            inner += choose2(p);
            q_fact_den *= q_factorial(p, q);
        }
        const int freedom = choose2(n) - inner;
        const BigNat remaining = galois_number(freedom, q);
        via_decompositions += decomposition_count(n, parts, q) * remaining;
        via_q_multinomial += exact_div(q_factorial(n, q), q_fact_den, "read_q_isotropic") *
                             pow_nat(q, freedom) * remaining;
    }
    if (via_decompositions != via_q_multinomial)
        throw integrity_error("read_q_isotropic: the two summation forms disagree");
    return via_decompositions;
}

BigNat ortho_q(int n, int c, int q) {
    check_n(n, "ortho_q");
    check_c(c);
    BigNat acc = 0;
    for (const Composition& parts : compositions(n, c)) {
        int inner = 0;
        for (int p : parts.parts())
            inner += choose2(p);
        acc += decomposition_count(n, parts, q) * galois_number(inner, q);
    }
    return acc;
}

BigNat connected_graphs(int n) {
    if (n < 1)
        throw std::domain_error("connected_graphs: n must be at least 1");
    return cg_table(n)[n];
}

BigNat no_isolated_graphs(int n) {
    check_n(n, "no_isolated_graphs");
    return ndg_table(n)[n];
}

BigNat nds(int n, int q) {
    check_n(n, "nds");
    return nds_table(n, q)[n];
}

BigNat dis(int n, int q) {
    check_n(n, "dis");
    return dis_table(n, q)[n];
}

BigNat dis_rooted_recursion(int n, int q) {
    check_n(n, "dis_rooted_recursion");
    return dis_rooted_table(n, q)[n];
}

BigNat rg(int n) {
    if (n < 1)
        throw std::domain_error("rg: n must be at least 1");
    return n * graph_count(n);
}

BigNat rs(int n, int q) {
    if (n < 1)
        throw std::domain_error("rs: n must be at least 1");
    return (pow_nat(q, n) - 1) * nds(n, q);
}

BigNat unordered_variant(const BigNat& ordered_count, int c) {
    check_c(c);
    return exact_div(ordered_count, factorial(c), "unordered_variant");
}

SequenceTable sequence_table(const std::string& formula_id, int n_max, std::optional<int> q,
                             std::optional<int> c) {
    auto need_q = [&]() -> int {
        if (!q)
            throw std::invalid_argument("formula '" + formula_id + "' requires --q");
        return *q;
    };
    auto need_c = [&]() -> int {
        if (!c)
            throw std::invalid_argument("formula '" + formula_id + "' requires --c");
        return *c;
    };

    SequenceTable tab;
    tab.name = formula_id;
    tab.q = q;
    tab.c = c;

    BigNat (*unary)(int) = nullptr;
    if (formula_id == "graphs")
        unary = graph_count;
    else if (formula_id == "connected") {
        unary = connected_graphs;
        tab.n_min = 1;
    } else if (formula_id == "no-isolated")
        unary = no_isolated_graphs;

    if (unary) {
        for (int n = tab.n_min; n <= n_max; ++n)
            tab.values.push_back(unary(n));
        return tab;
    }

    if (formula_id == "spaces") {
        int qq = need_q();
        for (int n = 0; n <= n_max; ++n)
            tab.values.push_back(space_count(n, qq));
    } else if (formula_id == "nds") {
        int qq = need_q();
        for (int n = 0; n <= n_max; ++n)
            tab.values.push_back(nds(n, qq));
    } else if (formula_id == "dis") {
        int qq = need_q();
        tab.n_min = 2;
        for (int n = 2; n <= n_max; ++n)
            tab.values.push_back(dis(n, qq));
    } else if (formula_id == "read") {
        int cc = need_c();
        for (int n = 0; n <= n_max; ++n)
            tab.values.push_back(read_colored(n, cc));
    } else if (formula_id == "read-q") {
        int qq = need_q(), cc = need_c();
        for (int n = 0; n <= n_max; ++n)
            tab.values.push_back(read_q_isotropic(n, cc, qq));
    } else if (formula_id == "ortho-q") {
        int qq = need_q(), cc = need_c();
        for (int n = 0; n <= n_max; ++n)
            tab.values.push_back(ortho_q(n, cc, qq));
    } else if (formula_id == "rooted") {
        // rooted graphs without --q, rooted non-degenerate spaces with it
        tab.n_min = 1;
        for (int n = 1; n <= n_max; ++n)
            tab.values.push_back(q ? rs(n, *q) : rg(n));
    } else {
        throw std::invalid_argument("unknown formula '" + formula_id + "'");
    }
    return tab;
}

} // namespace altcount::formulas
