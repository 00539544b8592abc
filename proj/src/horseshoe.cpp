#include "updyn/horseshoe.hpp"

#include <stdexcept>

namespace updyn {

TwoSidedWord TwoSidedWord::parse(std::string_view s) {
    auto dot = s.find('.');
    if (dot == std::string_view::npos || s.find('.', dot + 1) != std::string_view::npos)
        throw std::invalid_argument("two-sided word needs exactly one dot");
    TwoSidedWord w;
    // Left of the dot reads left-to-right as a_{-k} ... a_{-1}; storage is
    // outward from the dot.
    for (std::size_t i = dot; i-- > 0;) {
        char c = s[i];
        if (c != '0' && c != '1') throw std::invalid_argument("two-sided word symbols must be 0 or 1");
        w.past.push_back(c - '0');
    }
    for (std::size_t i = dot + 1; i < s.size(); ++i) {
        char c = s[i];
        if (c != '0' && c != '1') throw std::invalid_argument("two-sided word symbols must be 0 or 1");
        w.future.push_back(c - '0');
    }
    return w;
}

std::string TwoSidedWord::str() const {
    std::string out;
    for (std::size_t i = past.length(); i-- > 0;) out.push_back(past.symbol(i) ? '1' : '0');
    out.push_back('.');
    out += future.str();
    return out;
}

HorseshoeSystem::HorseshoeSystem(Rational lambda, Rational mu_e)
    : lambda_(std::move(lambda)), mu_(std::move(mu_e)) {
    if (!(lambda_ > 0 && lambda_ < Rational(1, 2)))
        throw std::domain_error("contraction must lie in (0, 1/2)");
    if (!(mu_ > 2)) throw std::domain_error("expansion must exceed 2");
}

Box2 HorseshoeSystem::v_strip(int symbol) const {
    Rational w = 1 / mu_;
    w.canonicalize();
    RatInterval unit(Rational(0), Rational(1));
    if (symbol == 0) return Box2{RatInterval(Rational(0), w), unit};
    if (symbol == 1) return Box2{RatInterval(1 - w, Rational(1)), unit};
    throw std::domain_error("strip symbol must be 0 or 1");
}

Box2 HorseshoeSystem::h_strip(int symbol) const {
    RatInterval unit(Rational(0), Rational(1));
    if (symbol == 0) return Box2{unit, RatInterval(Rational(0), lambda_)};
    if (symbol == 1) return Box2{unit, RatInterval(1 - lambda_, Rational(1))};
    throw std::domain_error("strip symbol must be 0 or 1");
}

namespace {

// Which vertical strip certifiably holds the box; -1 when neither.
int v_symbol(const HorseshoeSystem& sys, const Box2& p) {
    if (sys.v_strip(0).contains(p)) return 0;
    if (sys.v_strip(1).contains(p)) return 1;
    return -1;
}

int h_symbol(const HorseshoeSystem& sys, const Box2& p) {
    if (sys.h_strip(0).contains(p)) return 0;
    if (sys.h_strip(1).contains(p)) return 1;
    return -1;
}

Box2 forward_branch(const HorseshoeSystem& sys, int symbol, const Box2& p) {
    if (symbol == 0) return Box2{sys.mu_e() * p.x, sys.lambda() * p.y};
    return Box2{sys.mu_e() * (Rational(1) - p.x), Rational(1) - sys.lambda() * p.y};
}

Box2 backward_branch(const HorseshoeSystem& sys, int symbol, const Box2& p) {
    Rational inv_mu = 1 / sys.mu_e();
    Rational inv_l = 1 / sys.lambda();
    inv_mu.canonicalize();
    inv_l.canonicalize();
    if (symbol == 0) return Box2{inv_mu * p.x, inv_l * p.y};
    return Box2{Rational(1) - inv_mu * p.x, inv_l * (Rational(1) - p.y)};
}

}  // namespace

std::optional<Box2> horseshoe_step(const HorseshoeSystem& sys, const Box2& p) {
    int a = v_symbol(sys, p);
    if (a < 0) return std::nullopt;
    return forward_branch(sys, a, p);
}

HorseshoeItinerary horseshoe_itinerary(const HorseshoeSystem& sys, const Box2& p, unsigned forward_len,
                                       unsigned backward_len) {
    HorseshoeItinerary out;
    Box2 b = p;
    for (unsigned k = 0; k < forward_len; ++k) {
        int a = v_symbol(sys, b);
        if (a < 0) {
            out.forward_undecided_at = k;
            break;
        }
        out.forward.push_back(a);
        if (k + 1 < forward_len) b = forward_branch(sys, a, b);
    }
    b = p;
    for (unsigned m = 1; m <= backward_len; ++m) {
        int a = h_symbol(sys, b);
        if (a < 0) {
            out.backward_undecided_at = m;
            break;
        }
        out.backward.push_back(a);
        b = backward_branch(sys, a, b);
    }
    return out;
}

Box2 horseshoe_box_for(const HorseshoeSystem& sys, const TwoSidedWord& w) {
    Rational inv_mu = 1 / sys.mu_e();
    inv_mu.canonicalize();
    RatInterval x(Rational(0), Rational(1));
    for (std::size_t i = w.future.length(); i-- > 0;) {
        if (w.future.symbol(i) == 0)
            x = inv_mu * x;
        else
            x = Rational(1) - inv_mu * x;
    }
    RatInterval y(Rational(0), Rational(1));
    for (std::size_t i = w.past.length(); i-- > 0;) {
        if (w.past.symbol(i) == 0)
            y = sys.lambda() * y;
        else
            y = Rational(1) - sys.lambda() * y;
    }
    return Box2{x, y};
}

}  // namespace updyn
