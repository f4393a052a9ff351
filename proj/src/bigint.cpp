#include "altcount/bigint.hpp"

#include <sstream>

namespace altcount {

BigNat exact_div(const BigNat& num, const BigNat& den, const char* context) {
    if (den == 0)
        throw integrity_error(std::string(context) + ": division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        std::ostringstream os;
        os << context << ": inexact division " << num << " / " << den;
        throw integrity_error(os.str());
    }
    BigNat q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigNat pow_nat(const BigNat& base, unsigned long exp) {
    BigNat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigNat rat_to_nat(const BigRat& r, const char* context) {
    if (r.get_den() != 1) {
        std::ostringstream os;
        os << context << ": non-integer value " << r;
        throw integrity_error(os.str());
    }
    return r.get_num();
}

std::string to_string(const BigNat& v) { return v.get_str(); }

std::string to_string(const BigRat& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

} // namespace altcount
