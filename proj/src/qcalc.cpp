#include "altcount/qcalc.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace altcount {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), n_(0) {
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("Composition: parts must be positive");
        n_ += p;
    }
}

namespace qcalc {
namespace {

void check_q(int q) {
    if (q < 1)
        throw std::domain_error("q must be a positive integer");
}

int choose2(int n) { return n * (n - 1) / 2; }

} // namespace

BigNat q_int(int n, int q) {
    check_q(q);
    if (n < 0)
        throw std::domain_error("q_int: n must be nonnegative");
    if (q == 1)
        return n;
    BigNat acc = 0, pw = 1;
    for (int k = 0; k < n; ++k) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

BigNat q_factorial(int n, int q) {
    check_q(q);
    if (n < 0)
        throw std::domain_error("q_factorial: n must be nonnegative");
    // Memo caches are per thread, so concurrent callers never contend and
    // always observe identical values.
    thread_local std::map<std::pair<int, int>, BigNat> memo;
    auto it = memo.find({n, q});
    if (it != memo.end())
        return it->second;
    BigNat acc = 1;
    for (int k = 1; k <= n; ++k)
        acc *= q_int(k, q);
    memo.emplace(std::pair{n, q}, acc);
    return acc;
}

BigNat gauss_binom(int n, int k, int q) {
    check_q(q);
    if (n < 0)
        throw std::domain_error("gauss_binom: n must be nonnegative");
    if (k < 0 || k > n)
        return 0; // simplifies summation loops
    thread_local std::map<std::tuple<int, int, int>, BigNat> memo;
    auto it = memo.find({n, k, q});
    if (it != memo.end())
        return it->second;
    BigNat v = exact_div(q_factorial(n, q), q_factorial(k, q) * q_factorial(n - k, q),
                         "gauss_binom");
    memo.emplace(std::tuple{n, k, q}, v);
    return v;
}

BigNat galois_number(int m, int q) {
    check_q(q);
    if (m < 0)
        throw std::domain_error("galois_number: m must be nonnegative");
    thread_local std::map<std::pair<int, int>, BigNat> memo;
    auto it = memo.find({m, q});
    if (it != memo.end())
        return it->second;
    BigNat acc = 0;
    for (int d = 0; d <= m; ++d)
        acc += gauss_binom(m, d, q);
    memo.emplace(std::pair{m, q}, acc);
    return acc;
}

BigNat decomposition_count(int n, const Composition& parts, int q) {
    check_q(q);
    if (parts.n() != n)
        throw std::invalid_argument("decomposition_count: parts must sum to n");
    BigNat num = pow_nat(q, choose2(n)) * q_factorial(n, q);
    BigNat den = 1;
    for (int p : parts.parts())
        den *= pow_nat(q, choose2(p)) * q_factorial(p, q);
    return exact_div(num, den, "decomposition_count");
}

std::vector<Composition> compositions(int n, int c) {
    if (n < 0 || c < 1)
        throw std::domain_error("compositions: need n >= 0, c >= 1");
    std::vector<Composition> out;
    std::vector<int> cur;
    // Lexicographic: smallest first part first, recursively.
    auto rec = [&](auto&& self, int rest, int slots) -> void {
        if (slots == 1) {
            if (rest >= 1) {
                cur.push_back(rest);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int first = 1; first <= rest - (slots - 1); ++first) {
            cur.push_back(first);
            self(self, rest - first, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, c);
    return out;
}

BigNat binom(int n, int k) {
    if (n < 0)
        throw std::domain_error("binom: n must be nonnegative");
    if (k < 0 || k > n)
        return 0;
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigNat factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial: n must be nonnegative");
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigNat multinomial(int n, const Composition& parts) {
    if (parts.n() != n)
        throw std::invalid_argument("multinomial: parts must sum to n");
    BigNat den = 1;
    for (int p : parts.parts())
        den *= factorial(p);
    return exact_div(factorial(n), den, "multinomial");
}

} // namespace qcalc
} // namespace altcount
