#include "updyn/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace updyn {

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
    unsigned long k = std::min(tz, exp_);
    if (k > 0) {
        num_ >>= k;
        exp_ -= k;
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    unsigned long e = std::max(exp_, o.exp_);
    Integer a = num_ << (e - exp_);
    Integer b = o.num_ << (e - o.exp_);
    return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
    unsigned long e = std::max(exp_, o.exp_);
    Integer a = num_ << (e - exp_);
    Integer b = o.num_ << (e - o.exp_);
    return Dyadic(a - b, e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::times_pow2(long k) const {
    if (k >= 0) {
        unsigned long uk = static_cast<unsigned long>(k);
        if (exp_ >= uk) return Dyadic(num_, exp_ - uk);
        return Dyadic(num_ << (uk - exp_), 0);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned long>(-k));
}

int Dyadic::compare(const Dyadic& o) const {
    unsigned long e = std::max(exp_, o.exp_);
    Integer a = num_ << (e - exp_);
    Integer b = o.num_ << (e - o.exp_);
    return cmp(a, b);
}

Rational Dyadic::to_rational() const {
    Rational r(num_, pow2(exp_));
    r.canonicalize();
    return r;
}

std::string Dyadic::str() const {
    return num_.get_str(10) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a dyadic: '" + s + "'"); };
    auto slash = s.find('/');
    Integer num;
    if (mpz_set_str(num.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0) throw bad();
    if (slash == std::string::npos) return Dyadic(num);
    std::string den = s.substr(slash + 1);
    if (den.rfind("2^", 0) != 0) throw bad();
    std::string es = den.substr(2);
    if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return Dyadic(num, std::stoul(es));
}

}  // namespace updyn
