#include "updyn/integer.hpp"

#include <stdexcept>

namespace updyn {

Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative input");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r = isqrt_floor(n);
    if (r * r < n) ++r;
    return r;
}

int bit_of(const Integer& v, unsigned long k) {
    return mpz_tstbit(v.get_mpz_t(), k);
}

std::optional<std::int64_t> to_i64(const Integer& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

std::string to_decimal(const Integer& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str(10);
    return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace updyn
