#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "updyn/dyadic.hpp"
#include "updyn/metric.hpp"
#include "updyn/stream.hpp"
#include "updyn/word.hpp"

using namespace updyn;

namespace {

// Repeats `pat` over the whole index range (both directions for bi-infinite).
SymbolStream periodic(StreamKind kind, std::string pat) {
    const long n = static_cast<long>(pat.size());
    return make_stream(
        kind,
        [pat, n](const Integer& i) {
            Integer m = i % n;
            if (m < 0) m += n;
            return pat[m.get_ui()] - '0';
        },
        "periodic:" + pat);
}

// Slow independent window sum of the metric series, in plain rationals.
Rational window_sum(const SymbolStream& a, const SymbolStream& b, long radius) {
    Rational total(0);
    const long lo = a.kind() == StreamKind::one_sided ? 0 : -radius;
    for (long k = lo; k <= radius; ++k) {
        if (a.symbol(Integer(k)) != b.symbol(Integer(k))) {
            const unsigned long ak = static_cast<unsigned long>(k < 0 ? -k : k);
            total += Rational(Integer(1), pow2(ak));
        }
    }
    return total;
}

}  // namespace

TEST_CASE("dyadic canonical form and parsing") {
    CHECK(Dyadic().str() == "0/2^0");
    CHECK(Dyadic(7).str() == "7/2^0");
    CHECK(Dyadic::one_over_pow2(5).str() == "1/2^5");
    CHECK(Dyadic(Integer(6), 1).str() == "3/2^0");
    CHECK(Dyadic(Integer(4), 3).str() == "1/2^1");
    CHECK(Dyadic(Integer(0), 9).str() == "0/2^0");
    CHECK(Dyadic(Integer(-6), 2).str() == "-3/2^1");

    CHECK(Dyadic::parse("3/2^5") == Dyadic(Integer(3), 5));
    CHECK(Dyadic::parse("7") == Dyadic(7));
    CHECK(Dyadic::parse("-1/2^3") == Dyadic(Integer(-1), 3));
    CHECK_THROWS_AS(Dyadic::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("1/2^"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("x/2^3"), std::invalid_argument);
}

TEST_CASE("dyadic arithmetic agrees with rational arithmetic") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> nums(-1000000, 1000000);
    std::uniform_int_distribution<unsigned long> exps(0, 40);
    std::uniform_int_distribution<long> shifts(-30, 30);
    for (int round = 0; round < 500; ++round) {
        const Dyadic a(Integer(nums(rng)), exps(rng));
        const Dyadic b(Integer(nums(rng)), exps(rng));
        const Rational ra = a.to_rational(), rb = b.to_rational();
        CHECK((a + b).to_rational() == ra + rb);
        CHECK((a - b).to_rational() == ra - rb);
        CHECK((a * b).to_rational() == ra * rb);
        CHECK(a.compare(b) == cmp(ra, rb));
        CHECK(Dyadic::parse(a.str()) == a);

        const long k = shifts(rng);
        Rational scale = k >= 0 ? Rational(pow2(static_cast<unsigned long>(k)))
                                : Rational(Integer(1), pow2(static_cast<unsigned long>(-k)));
        CHECK(a.times_pow2(k).to_rational() == ra * scale);
    }
}

TEST_CASE("dyadic comparisons are exact") {
    CHECK(Dyadic::one_over_pow2(10) < Dyadic::one_over_pow2(9));
    CHECK(Dyadic(1) >= Dyadic(Integer(1023), 10));
    CHECK(Dyadic(1) > Dyadic(Integer(1023), 10));
    CHECK(Dyadic(Integer(1024), 10) == Dyadic(1));
    CHECK(Dyadic(Integer(-1), 4).sign() == -1);
    CHECK(Dyadic().is_zero());
}

TEST_CASE("finite words: construction, values, slicing") {
    const FiniteWord w("0110");
    CHECK(w.length() == 4);
    CHECK(w.symbol(0) == 0);
    CHECK(w.symbol(1) == 1);
    CHECK(w.str() == "0110");
    CHECK(w.value() == 6);
    CHECK(FiniteWord::from_value(Integer(6), 4) == w);
    CHECK(FiniteWord::from_value(Integer(0), 3).str() == "000");
    CHECK(w.prefix(2).str() == "01");
    CHECK(w.suffix_from(1).str() == "110");
    CHECK(w.suffix_from(4).empty());

    FiniteWord grown;
    grown.push_back(1);
    grown.push_back(0);
    CHECK(grown.str() == "10");

    CHECK_THROWS_AS(FiniteWord("012"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteWord::from_value(Integer(8), 3), std::domain_error);
    CHECK_THROWS_AS(w.prefix(5), std::out_of_range);
}

TEST_CASE("word value round trip across lengths") {
    for (std::size_t len = 1; len <= 10; ++len) {
        for (unsigned long v = 0; v < (1UL << len); ++v) {
            const FiniteWord w = FiniteWord::from_value(Integer(static_cast<long>(v)), len);
            CHECK(w.length() == len);
            CHECK(w.value() == static_cast<long>(v));
        }
    }
}

TEST_CASE("streams: shifting composes offsets without copying the rule") {
    const SymbolStream s = periodic(StreamKind::bi_infinite, "0110");
    CHECK(s.symbol(Integer(0)) == 0);
    CHECK(s.symbol(Integer(1)) == 1);
    CHECK(s.symbol(Integer(-1)) == 0);
    CHECK(s.symbol(Integer(-2)) == 1);

    const SymbolStream s2 = shift(shift(s, Integer(3)), Integer(-5));
    CHECK(s2.offset() == -2);
    CHECK(s2.rule_ptr() == s.rule_ptr());
    for (long i = -8; i <= 8; ++i) CHECK(s2.symbol(Integer(i)) == s.symbol(Integer(i - 2)));
}

TEST_CASE("one-sided streams reject negative territory") {
    const SymbolStream s = periodic(StreamKind::one_sided, "01");
    CHECK_THROWS_AS(s.symbol(Integer(-1)), std::domain_error);
    CHECK_THROWS_AS(shift(s, Integer(-1)), std::domain_error);
    const SymbolStream up = shift(s, Integer(5));
    CHECK(shift(up, Integer(-5)).offset() == 0);
}

TEST_CASE("int64 fast path window check") {
    const SymbolStream s = periodic(StreamKind::bi_infinite, "01");
    CHECK(s.fast_ok(-1000, 1000));
    const SymbolStream far = shift(s, Integer(1) << 80);
    CHECK_FALSE(far.fast_ok(0, 10));
    CHECK(far.symbol(Integer(0)) == far.rule().at(Integer(1) << 80));
}

TEST_CASE("metric enclosure matches an independent window sum") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int round = 0; round < 20; ++round) {
        std::string pa, pb;
        for (int i = 0; i < 7; ++i) pa.push_back(static_cast<char>('0' + bit(rng)));
        for (int i = 0; i < 5; ++i) pb.push_back(static_cast<char>('0' + bit(rng)));
        for (StreamKind kind : {StreamKind::one_sided, StreamKind::bi_infinite}) {
            const SymbolStream a = periodic(kind, pa);
            const SymbolStream b = periodic(kind, pb);
            for (unsigned long radius : {0UL, 1UL, 3UL, 9UL, 20UL}) {
                const DyadicEnclosure e = metric(a, b, radius);
                CHECK(e.partial_sum().to_rational() == window_sum(a, b, static_cast<long>(radius)));
                const unsigned long tail_exp = kind == StreamKind::one_sided ? radius : radius - 1;
                if (kind == StreamKind::bi_infinite && radius == 0) {
                    CHECK(e.tail_bound() == Dyadic(2));
                } else {
                    CHECK(e.tail_bound() == Dyadic::one_over_pow2(tail_exp));
                }
            }
        }
    }
}

TEST_CASE("metric enclosures nest as the window widens") {
    const SymbolStream a = periodic(StreamKind::bi_infinite, "0100110");
    const SymbolStream b = periodic(StreamKind::bi_infinite, "110");
    DyadicEnclosure prev = metric(a, b, 1);
    for (unsigned long radius = 2; radius <= 24; ++radius) {
        const DyadicEnclosure next = metric(a, b, radius);
        CHECK(next.contained_in(prev));
        prev = next;
    }
}

TEST_CASE("metric kind mismatch is a domain error") {
    const SymbolStream a = periodic(StreamKind::one_sided, "01");
    const SymbolStream b = periodic(StreamKind::bi_infinite, "01");
    CHECK_THROWS_AS(metric(a, b, 4), std::domain_error);
}

TEST_CASE("metric_at_least decides soundly") {
    const SymbolStream zeros = periodic(StreamKind::one_sided, "0");
    const SymbolStream ones = periodic(StreamKind::one_sided, "1");

    // Equal streams: any positive threshold is eventually refuted.
    CHECK(metric_at_least(zeros, zeros, Dyadic::one_over_pow2(6)) == Ternary::no);

    // Origin mismatch alone certifies >= 1 instantly.
    CHECK(metric_at_least(zeros, ones, Dyadic(1)) == Ternary::yes);

    // True distance is exactly 2; threshold 2 sits on the limit and can
    // never be decided by finite windows, so the cap reports unknown.
    CHECK(metric_at_least(zeros, ones, Dyadic(2), 64) == Ternary::unknown);
    CHECK(metric_at_least(zeros, ones, Dyadic(2) + Dyadic::one_over_pow2(8), 64) == Ternary::no);
    CHECK(metric_at_least(zeros, ones, Dyadic(2) - Dyadic::one_over_pow2(8), 64) == Ternary::yes);

    CHECK_THROWS_AS(metric_at_least(zeros, ones, Dyadic(0)), std::domain_error);
    CHECK_THROWS_AS(metric_at_least(zeros, ones, Dyadic(Integer(-1), 2)), std::domain_error);
}

TEST_CASE("metric_at_least thresholds straddling a known distance") {
    // Bi-infinite all-zeros vs. the stream that is 1 only at index 3:
    // distance exactly 1/8.
    const SymbolStream zeros = periodic(StreamKind::bi_infinite, "0");
    const SymbolStream spike = make_stream(
        StreamKind::bi_infinite, [](const Integer& i) { return i == 3 ? 1 : 0; }, "spike@3");
    CHECK(metric_at_least(zeros, spike, Dyadic::one_over_pow2(3)) == Ternary::yes);
    CHECK(metric_at_least(zeros, spike, Dyadic::one_over_pow2(3) + Dyadic::one_over_pow2(20), 64) ==
          Ternary::no);
    CHECK(metric_at_least(zeros, spike, Dyadic::one_over_pow2(4)) == Ternary::yes);
}

TEST_CASE("agreement radius classifies pairs") {
    const SymbolStream zeros = periodic(StreamKind::one_sided, "0");
    const SymbolStream ones = periodic(StreamKind::one_sided, "1");
    CHECK(agreement_radius(zeros, ones, 32).kind == AgreementResult::Kind::mismatch_at_origin);
    CHECK(agreement_radius(zeros, zeros, 32).kind == AgreementResult::Kind::exceeds_cap);
    CHECK(agreement_radius(zeros, zeros, 32).at_least(1000));

    const SymbolStream flank = make_stream(
        StreamKind::bi_infinite, [](const Integer& i) { return (i == 5 || i == -5) ? 1 : 0; }, "flank@5");
    const SymbolStream zb = periodic(StreamKind::bi_infinite, "0");
    const AgreementResult r = agreement_radius(zb, flank, 32);
    CHECK(r.kind == AgreementResult::Kind::radius);
    CHECK(r.radius == 4);
    CHECK(r.at_least(4));
    CHECK_FALSE(r.at_least(5));
}
