// Acceptance gate: one criterion per line, [PASS]/[FAIL], nonzero exit on
// any failure. Each criterion carries a wall-clock cap; exceeding it fails
// the criterion even if the checks themselves hold.

#include <mpfr.h>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "updyn/certify.hpp"
#include "updyn/henon.hpp"
#include "updyn/horseshoe.hpp"
#include "updyn/logistic.hpp"
#include "updyn/star.hpp"

using namespace updyn;

namespace {

int g_failures = 0;

// ---------------------------------------------------------------- helpers

std::string run_cli(const std::string& args, int* status) {
    const std::string cmd = std::string(UPDYN_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *status = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

struct Failure {
    std::string why;
};

void require(bool cond, const std::string& why) {
    if (!cond) throw Failure{why};
}

void run_criterion(int id, const std::string& label, double cap_seconds,
                   const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = true;
    try {
        body();
    } catch (const Failure& f) {
        ok = false;
        why = f.why;
    } catch (const std::exception& e) {
        ok = false;
        why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > cap_seconds) {
        ok = false;
        why = "runtime cap exceeded";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s / cap %.0f s)%s%s\n", ok ? "PASS" : "FAIL", id,
                label.c_str(), secs, cap_seconds, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

SymbolStream alternating_stream() {
    return make_stream(
        StreamKind::one_sided, [](const Integer& i) { return static_cast<int>(mpz_odd_p(i.get_mpz_t())); },
        "alternating");
}

// Direct window-agreement check, independent of the certification code.
bool window_agrees_direct(const SymbolStream& s, const Integer& t, unsigned n) {
    const long lo = s.kind() == StreamKind::bi_infinite ? -static_cast<long>(n) : 0;
    for (long k = lo; k <= static_cast<long>(n); ++k) {
        if (s.symbol(t + Integer(k)) != s.symbol(Integer(k))) return false;
    }
    return true;
}

// ----------------------------------------------------------- criteria 1-2

void criterion_prefix_fidelity() {
    const std::string expected = "0100011011000001010011";
    int status = 0;
    const std::string out = run_cli("gen one-sided 0 22", &status);
    require(status == 0, "gen exited with " + std::to_string(status));
    require(out == expected + "\n", "gen output mismatch: " + out);

    const SymbolStream s = one_sided_star();
    const std::string oracle_prefix = oracle::one_sided_listing(3);   // covers 34 symbols
    for (std::size_t i = 0; i < expected.size(); ++i) {
        require(s.symbol(Integer(static_cast<long>(i))) == expected[i] - '0', "stream prefix mismatch");
        require(oracle_prefix.at(i) == expected[i], "oracle listing disagrees with the pinned prefix");
    }
}

void criterion_bi_layout() {
    // Radius-8 window dictated by the block layout: left ... 011 001 11 01,
    // right 0 00 10 000 010 ...
    const std::string left = "10011101";     // a_-8 .. a_-1
    const std::string right = "000100000";   // a_0 .. a_8
    const SymbolStream s = bi_infinite_star();
    const oracle::BiListing lst = oracle::bi_listing(6);
    for (long i = -8; i <= 8; ++i) {
        const char expect = i < 0 ? left.at(static_cast<std::size_t>(i + 8))
                                  : right.at(static_cast<std::size_t>(i));
        require(s.symbol(Integer(i)) == expect - '0', "bi stream window mismatch at " + std::to_string(i));
        require(oracle::bi_symbol(lst, i) == expect - '0',
                "oracle bi listing disagrees at " + std::to_string(i));
    }
    int status = 0;
    const std::string out = run_cli("gen bi-infinite -- -8 17", &status);
    require(status == 0, "gen exited with " + std::to_string(status));
    require(out == left + "." + right + "\n", "gen rendering mismatch: " + out);
}

// ----------------------------------------------------------- criteria 3-5

void criterion_one_sided_certificate() {
    const SymbolStream s = one_sided_star();
    const auto cert = certify_unpredictable(s, 12, ReturnMode::minimal);
    require(cert.entries.size() == 12, "missing entries");
    require(cert.all_verified(), "certificate not fully verified");
    Integer prev_t(0), prev_tau(0);
    for (const auto& e : cert.entries) {
        require(e.proximity_bound == Dyadic::one_over_pow2(e.depth), "wrong proximity bound");
        require(e.return_time > prev_t, "return times not increasing");
        require(e.separation_time > prev_tau, "separation times not increasing");
        require(e.separation_time >= Integer(static_cast<long>(e.depth + 1)), "tau below n + 1");
        require(window_agrees_direct(s, e.return_time, e.depth), "window agreement fails re-check");
        require(s.symbol(e.return_time + e.separation_time) != s.symbol(e.separation_time),
                "separation mismatch fails re-check");
        prev_t = e.return_time;
        prev_tau = e.separation_time;
    }
    const auto canon = certify_unpredictable(s, 12, ReturnMode::canonical);
    require(canon.all_verified(), "canonical certificate not verified");
    for (const auto& e : canon.entries) {
        Integer bound(0);
        for (unsigned j = 1; j <= e.depth; ++j) bound += Integer(j) * pow2(j);
        require(e.return_time >= bound, "canonical return below the listed lower bound");
    }
}

void criterion_bi_certificate() {
    const SymbolStream s = bi_infinite_star();
    const auto cert = certify_unpredictable(s, 10, ReturnMode::canonical);
    require(cert.entries.size() == 10, "missing entries");
    require(cert.all_verified(), "certificate not fully verified");
    Integer prev_t(0), prev_tau(0);
    for (const auto& e : cert.entries) {
        require(e.proximity_bound == Dyadic::one_over_pow2(e.depth - 1), "wrong bi proximity bound");
        require(e.return_time > prev_t, "return times not increasing");
        require(e.separation_time > prev_tau, "separation times not increasing");
        require(window_agrees_direct(s, e.return_time, e.depth), "bi window agreement fails re-check");
        require(s.symbol(e.return_time + e.separation_time) != s.symbol(e.separation_time),
                "bi separation fails re-check");
        prev_t = e.return_time;
        prev_tau = e.separation_time;
    }
}

void criterion_poisson() {
    const SymbolStream one = one_sided_star();
    const SymbolStream bi = bi_infinite_star();

    const auto fwd_one = certify_poisson_positive(one, 10, ReturnMode::minimal);
    require(fwd_one.size() == 10, "one-sided positive returns incomplete");
    Integer prev(0);
    for (const auto& e : fwd_one) {
        require(e.time > prev, "positive times not increasing");
        require(e.proximity_bound == Dyadic::one_over_pow2(e.depth), "wrong bound");
        require(window_agrees_direct(one, e.time, e.depth), "positive return fails re-check");
        prev = e.time;
    }

    const auto fwd_bi = certify_poisson_positive(bi, 10, ReturnMode::canonical);
    require(fwd_bi.size() == 10, "bi positive returns incomplete");
    prev = 0;
    for (const auto& e : fwd_bi) {
        require(e.time > prev, "bi positive times not increasing");
        require(e.proximity_bound == Dyadic::one_over_pow2(e.depth - 1), "wrong bi bound");
        require(window_agrees_direct(bi, e.time, e.depth), "bi positive return fails re-check");
        prev = e.time;
    }

    const auto back = certify_poisson_negative(bi, 6, ReturnMode::minimal);
    require(back.size() == 6, "negative returns incomplete");
    prev = 0;
    for (const auto& e : back) {
        require(e.time < prev, "negative times not decreasing");
        require(window_agrees_direct(bi, e.time, e.depth), "negative return fails re-check");
        prev = e.time;
    }
}

// ----------------------------------------------------------- criteria 6-8

void criterion_aperiodicity_and_negative_control() {
    for (const SymbolStream& s : {one_sided_star(), bi_infinite_star()}) {
        const auto rep = aperiodicity_check(s, 64, Integer(4096));
        require(rep.all_found, "aperiodicity witness missing");
        for (std::size_t qi = 0; qi < rep.witnesses.size(); ++qi) {
            const Integer& i = *rep.witnesses[qi];
            require(i <= 4096, "witness outside the index bound");
            require(s.symbol(i) != s.symbol(i + Integer(static_cast<long>(qi + 1))),
                    "witness fails re-check");
        }
    }
    SearchLimits lim;
    lim.horizon = Integer(1) << 14;
    bool threw = false;
    try {
        certify_unpredictable(alternating_stream(), 1, ReturnMode::minimal, lim);
    } catch (const SearchExhausted&) {
        threw = true;
    }
    require(threw, "periodic stream unexpectedly certified");
}

void criterion_transport() {
    const SymbolStream s = one_sided_star();
    const auto cert = certify_unpredictable(s, 12, ReturnMode::minimal);
    for (long k : {1L, 2L, 5L, 10L}) {
        const auto moved = transport_certificate(s, cert, Integer(k));
        require(moved.epsilon0 == Dyadic(1), "epsilon0 changed under transport");
        require(!moved.entries.empty(), "no entries survive shift " + std::to_string(k));
        require(moved.all_verified(), "transported certificate not verified");
        const SymbolStream q = shift(s, Integer(k));
        for (const auto& e : moved.entries) {
            require(window_agrees_direct(q, e.return_time, e.depth),
                    "transported window fails re-check");
            require(q.symbol(e.return_time + e.separation_time) != q.symbol(e.separation_time),
                    "transported separation fails re-check");
        }
    }
}

void criterion_sensitivity() {
    ShiftSystem sys(one_sided_star());
    const SymbolStream s = sys.designated();
    for (unsigned exp = 1; exp <= 8; ++exp) {
        const Dyadic delta = Dyadic::one_over_pow2(exp);
        for (long off = 0; off < 20; ++off) {
            const auto w = sensitivity_witness_on_orbit(sys, Integer(off), delta);
            require(w.has_value(), "no witness at delta 2^-" + std::to_string(exp) + ", offset " +
                                       std::to_string(off));
            require(w->separation_lower_bound >= Dyadic(1), "separation below 1");
            require(w->proximity_upper < delta, "proximity bound not below delta");
            // Exact origin mismatch at the witness time.
            const Integer base = Integer(off) + w->witness_shift;
            require(s.symbol(base + w->time) != s.symbol(Integer(off) + w->time),
                    "witness separation fails re-check");
        }
    }
}

// ---------------------------------------------------------- criteria 9-10

void criterion_density() {
    const SymbolStream one = one_sided_star();
    for (unsigned L = 1; L <= 10; ++L) {
        const auto rep = density_check(one, L);
        require(rep.all_found, "one-sided density incomplete at length " + std::to_string(L));
        for (const auto& h : rep.hits) {
            for (std::size_t i = 0; i < h.word.length(); ++i)
                require(one.symbol(h.shift_right + Integer(static_cast<long>(i))) == h.word.symbol(i),
                        "hit fails re-check");
        }
    }
    const SymbolStream bi = bi_infinite_star();
    for (unsigned r = 1; r <= 4; ++r) {
        const auto rep = density_check(bi, r);
        require(rep.all_found, "bi density incomplete at radius " + std::to_string(r));
        for (const auto& h : rep.hits) {
            require(h.shift_left.has_value(), "left-side shift missing");
            require(h.shift_right >= 1 && *h.shift_left <= -1, "shift signs wrong");
            for (long i = -static_cast<long>(r); i <= static_cast<long>(r); ++i) {
                const int expect = h.word.symbol(static_cast<std::size_t>(i + static_cast<long>(r)));
                require(bi.symbol(h.shift_right + Integer(i)) == expect, "right hit fails re-check");
                require(bi.symbol(*h.shift_left + Integer(i)) == expect, "left hit fails re-check");
            }
        }
    }
}

void criterion_conjugacy_round_trip() {
    const LogisticSystem sys(Rational(9, 2));
    for (unsigned L = 1; L <= 10; ++L) {
        for (unsigned long v = 0; v < (1UL << L); ++v) {
            const FiniteWord w = FiniteWord::from_value(Integer(static_cast<long>(v)), L);
            const ItineraryResult it = itinerary(sys, point_for(sys, w), L);
            require(it.decided(), "undecided round trip for " + w.str());
            require(it.word == w, "round trip mismatch for " + w.str());
        }
    }
    const CommutationReport rep = conjugacy_commutation_check(sys, 12, 100);
    require(rep.checked == 100, "commutation sample count wrong");
    require(rep.passed && rep.failures == 0, "commutation failures");
    const RatInterval box = transport_unpredictable_point(sys, 12);
    require(box.width() < Rational(Integer(1), Integer(256)), "transport enclosure too wide");
}

// --------------------------------------------------------- criteria 11-12

void criterion_henon_oracle() {
    require(henon_region_check(Rational(10), Rational(1)), "region_check(10, 1) must hold");
    require(!henon_region_check(Rational(9), Rational(1)), "region_check(9, 1) must fail");

    mpfr_t sq5, factor, threshold, alpha_f, diff;
    mpfr_inits2(200, sq5, factor, threshold, alpha_f, diff, static_cast<mpfr_ptr>(nullptr));
    mpfr_sqrt_ui(sq5, 5, MPFR_RNDN);
    mpfr_mul_ui(factor, sq5, 2, MPFR_RNDN);
    mpfr_add_ui(factor, factor, 5, MPFR_RNDN);   // 5 + 2*sqrt(5)

    std::mt19937_64 rng(0xacce9ed);
    std::uniform_int_distribution<long> alpha_num(0, 4000), den(1, 100), beta_num(-300, 300);
    unsigned checked = 0;
    while (checked < 1000) {
        Rational alpha(Integer(alpha_num(rng)), Integer(den(rng)));
        alpha.canonicalize();
        const long bn = beta_num(rng);
        if (bn == 0) continue;
        Rational beta(Integer(bn), Integer(den(rng)));
        beta.canonicalize();

        Rational scale = (Rational(1) + abs(beta)) * (Rational(1) + abs(beta)) / Rational(4);
        mpfr_set_q(threshold, scale.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(threshold, threshold, factor, MPFR_RNDN);
        mpfr_set_q(alpha_f, alpha.get_mpq_t(), MPFR_RNDN);
        mpfr_sub(diff, alpha_f, threshold, MPFR_RNDN);

        mpfr_abs(alpha_f, diff, MPFR_RNDN);   // reuse as |diff|
        if (mpfr_cmp_ui_2exp(alpha_f, 1, -20) <= 0) continue;   // inside the knife-edge margin

        const bool float_says = mpfr_sgn(diff) > 0;
        const bool exact_says = henon_region_check(alpha, beta);
        if (float_says != exact_says) {
            mpfr_clears(sq5, factor, threshold, alpha_f, diff, static_cast<mpfr_ptr>(nullptr));
            throw Failure{"exact predicate disagrees with the 200-bit oracle"};
        }
        ++checked;
    }
    mpfr_clears(sq5, factor, threshold, alpha_f, diff, static_cast<mpfr_ptr>(nullptr));
}

void criterion_horseshoe() {
    const HorseshoeSystem sys;
    std::mt19937_64 rng(0x40753503);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int chain = 0; chain < 40; ++chain) {
        std::string past, future;
        future.push_back(static_cast<char>('0' + bit(rng)));
        Box2 prev = horseshoe_box_for(sys, TwoSidedWord::parse("." + future));
        for (unsigned r = 1; r <= 5; ++r) {
            past.push_back(static_cast<char>('0' + bit(rng)));
            future.push_back(static_cast<char>('0' + bit(rng)));
            const TwoSidedWord w = TwoSidedWord::parse(
                std::string(past.rbegin(), past.rend()) + "." + future);
            const Box2 box = horseshoe_box_for(sys, w);
            require(prev.contains(box), "cylinder boxes fail to nest at radius " + std::to_string(r));
            Integer p3f(1), p3p(1);
            for (unsigned i = 0; i < r + 1; ++i) p3f *= 3;
            for (unsigned i = 0; i < r; ++i) p3p *= 3;
            require(box.x.width() == Rational(Integer(1), p3f), "x width off the affine rate");
            require(box.y.width() == Rational(Integer(1), p3p), "y width off the affine rate");

            const Box2 centre{RatInterval(box.x.mid()), RatInterval(box.y.mid())};
            const HorseshoeItinerary it = horseshoe_itinerary(
                sys, centre, static_cast<unsigned>(future.size()), static_cast<unsigned>(past.size()));
            require(it.decided(), "centre itinerary undecided for " + w.str());
            require(it.forward == w.future, "forward symbols mismatch for " + w.str());
            require(it.backward == w.past, "backward symbols mismatch for " + w.str());
            prev = box;
        }
    }
}

}  // namespace

int main() {
    run_criterion(1, "prefix fidelity of the one-sided listing", 1.0, criterion_prefix_fidelity);
    run_criterion(2, "bi-infinite central window layout", 1.0, criterion_bi_layout);
    run_criterion(3, "one-sided unpredictability certificate, n <= 12", 30.0,
                  criterion_one_sided_certificate);
    run_criterion(4, "bi-infinite unpredictability certificate, n <= 10", 60.0, criterion_bi_certificate);
    run_criterion(5, "Poisson returns, both spaces and both directions", 60.0, criterion_poisson);
    run_criterion(6, "aperiodicity scan and the periodic negative control", 10.0,
                  criterion_aperiodicity_and_negative_control);
    run_criterion(7, "certificate transport along the orbit", 30.0, criterion_transport);
    run_criterion(8, "sensitivity witnesses across deltas 2^-1 .. 2^-8", 60.0, criterion_sensitivity);
    run_criterion(9, "density of words and central patterns", 60.0, criterion_density);
    run_criterion(10, "logistic conjugacy round trip at mu = 9/2", 120.0, criterion_conjugacy_round_trip);
    run_criterion(11, "Henon region predicate vs 200-bit oracle", 10.0, criterion_henon_oracle);
    run_criterion(12, "horseshoe cylinders: rates, nesting, centre itineraries", 10.0,
                  criterion_horseshoe);

    if (g_failures == 0) {
        std::printf("all 12 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
