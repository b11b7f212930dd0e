#include "sjet/rational.hpp"

#include <stdexcept>

namespace sjet {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
    q.canonicalize();
    return q;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace sjet
