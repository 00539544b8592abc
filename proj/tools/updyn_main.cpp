// updyn: generate the listed binary sequences, certify their return-time
// structure, and transport the construction into the logistic family, the
// Henon parameter region, and an affine horseshoe.
//
// Exit codes: 0 every requested verification passed; 1 a verification
// failed or stayed undecided; 2 usage or domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "updyn/certify.hpp"
#include "updyn/henon.hpp"
#include "updyn/horseshoe.hpp"
#include "updyn/logistic.hpp"
#include "updyn/report.hpp"
#include "updyn/star.hpp"

namespace {

using namespace updyn;

constexpr unsigned kMaxDepth = 16;        // --n-max guardrail
constexpr unsigned kMaxWindow = 14;       // word length / resolution guardrail
const long kMaxHorizon = 1L << 20;        // scan guardrail

struct CommonFlags {
    std::string output;
    bool unsafe = false;
    std::string horizon = std::to_string(kMaxHorizon);
    unsigned long precision = 64;
};

[[noreturn]] void usage_error(const std::string& msg) { throw CLI::ValidationError("updyn", msg); }

Integer parse_integer(const std::string& s) {
    try {
        return Integer(s);
    } catch (const std::invalid_argument&) {
        usage_error("not an integer: '" + s + "'");
    }
}

Rational parse_rational(const std::string& s) {
    try {
        return rational_from_string(s);
    } catch (const std::invalid_argument&) {
        usage_error("not a rational: '" + s + "'");
    }
}

RatInterval parse_interval(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return RatInterval(parse_rational(s));
    Rational lo = parse_rational(s.substr(0, colon));
    Rational hi = parse_rational(s.substr(colon + 1));
    if (lo > hi) usage_error("interval endpoints out of order: '" + s + "'");
    return RatInterval(lo, hi);
}

FiniteWord parse_word(const std::string& s) {
    try {
        return FiniteWord(s);
    } catch (const std::invalid_argument&) {
        usage_error("words are strings over {0,1}: '" + s + "'");
    }
}

StreamKind parse_space(const std::string& s) {
    if (s == "one-sided") return StreamKind::one_sided;
    if (s == "bi-infinite") return StreamKind::bi_infinite;
    usage_error("space must be one-sided or bi-infinite");
}

SymbolStream star_for(StreamKind k) {
    return k == StreamKind::one_sided ? one_sided_star() : bi_infinite_star();
}

SearchLimits limits_from(const CommonFlags& flags) {
    SearchLimits lim;
    lim.horizon = parse_integer(flags.horizon);
    if (lim.horizon < 1) usage_error("horizon must be positive");
    if (!flags.unsafe && lim.horizon > kMaxHorizon)
        usage_error("horizon exceeds the guardrail 2^20; pass --unsafe-limits to override");
    return lim;
}

void check_depth(unsigned n_max, const CommonFlags& flags) {
    if (n_max == 0) usage_error("depth must be at least 1");
    if (!flags.unsafe && n_max > kMaxDepth)
        usage_error("depth exceeds the guardrail 16; pass --unsafe-limits to override");
}

void check_window(unsigned long w, const CommonFlags& flags) {
    if (w == 0) usage_error("window must be at least 1");
    if (!flags.unsafe && w > kMaxWindow)
        usage_error("window exceeds the guardrail 14; pass --unsafe-limits to override");
}

void write_out(const CommonFlags& flags, const std::string& text) {
    if (flags.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(flags.output);
    if (!f) usage_error("cannot open output file '" + flags.output + "'");
    f << text;
}

void emit_report(const CommonFlags& flags, const ReportDocument& doc) { write_out(flags, doc.serialize()); }

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--output", flags.output, "write the report to a file instead of stdout");
    cmd->add_flag("--unsafe-limits", flags.unsafe, "lift the depth/window/horizon guardrails");
    cmd->add_option("--horizon", flags.horizon, "scan horizon for minimal-mode searches")
        ->capture_default_str();
}

// ---------------------------------------------------------------- gen ----

// Block-boundary test for the annotated listing display.
bool block_starts_at(StreamKind kind, const Integer& i) {
    if (kind == StreamKind::one_sided) {
        unsigned m = 1;
        while (one_sided_segment_start(m + 1) <= i) ++m;
        Integer rel = i - one_sided_segment_start(m);
        return mpz_divisible_ui_p(rel.get_mpz_t(), m) != 0;
    }
    if (i >= 1) {
        unsigned m = 1;
        while (bi_segment_start_right(m + 1) <= i) ++m;
        Integer rel = i - bi_segment_start_right(m);
        return mpz_divisible_ui_p(rel.get_mpz_t(), m) != 0;
    }
    if (i == 0) return true;
    unsigned m = 2;
    while (true) {
        Integer left = bi_segment_start_left(m);
        Integer right_edge = left + Integer(static_cast<long>(m)) * pow2(m - 1) - 1;
        if (i >= left && i <= right_edge) {
            Integer rel = right_edge - i + 1;   // 1 at the segment's right edge
            Integer rem = rel - 1;
            return mpz_divisible_ui_p(rem.get_mpz_t(), m) != 0;
        }
        ++m;
        if (m > 200) return false;
    }
}

int cmd_gen(const std::string& space, const std::string& start_s, long count, bool annotate,
            const std::string& format, const CommonFlags& flags) {
    StreamKind kind = parse_space(space);
    Integer start = parse_integer(start_s);
    if (count < 1) usage_error("count must be at least 1");
    if (!flags.unsafe && count > kMaxHorizon)
        usage_error("count exceeds the guardrail 2^20; pass --unsafe-limits to override");
    if (kind == StreamKind::one_sided && start < 0) usage_error("one-sided indices start at 0");

    SymbolStream s = star_for(kind);
    std::string symbols;
    std::string annotated;
    for (long k = 0; k < count; ++k) {
        Integer i = start + k;
        if (kind == StreamKind::bi_infinite && i == 0 && (start < 0 || k > 0 || start == 0))
            annotated += ".";
        if (annotate && block_starts_at(kind, i) && !(kind == StreamKind::bi_infinite && i == 0))
            if (k > 0) annotated += " ";
        char c = s.symbol(i) ? '1' : '0';
        symbols += c;
        annotated += c;
    }
    std::string rendered;
    if (kind == StreamKind::bi_infinite && start <= 0 && start + count > 0) {
        long dot = static_cast<long>(-start.get_si());
        rendered = symbols.substr(0, dot) + "." + symbols.substr(dot);
    } else {
        rendered = symbols;
    }

    if (format == "json") {
        ReportDocument doc;
        doc.command = "gen";
        doc.parameters["space"] = space;
        doc.parameters["start"] = to_decimal(start);
        doc.parameters["count"] = count;
        doc.results["window"] = window_json(start, symbols, kind == StreamKind::bi_infinite);
        doc.results["rendered"] = rendered;
        emit_report(flags, doc);
    } else {
        write_out(flags, (annotate ? annotated : rendered) + "\n");
    }
    return 0;
}

// ------------------------------------------------------------- certify ----

std::string certificate_csv(const UnpredictabilityCertificate& cert) {
    std::ostringstream os;
    os << "n,t,tau\n";
    for (const auto& e : cert.entries)
        os << e.depth << "," << to_decimal(e.return_time) << "," << to_decimal(e.separation_time) << "\n";
    return os.str();
}

int cmd_certify(const std::string& space, unsigned n_max, const std::string& mode_s, const std::string& format,
                const CommonFlags& flags) {
    StreamKind kind = parse_space(space);
    check_depth(n_max, flags);
    if (mode_s != "minimal" && mode_s != "canonical") usage_error("mode must be minimal or canonical");
    ReturnMode mode = mode_s == "minimal" ? ReturnMode::minimal : ReturnMode::canonical;
    SearchLimits lim = limits_from(flags);

    UnpredictabilityCertificate cert;
    try {
        cert = certify_unpredictable(star_for(kind), n_max, mode, lim);
    } catch (const SearchExhausted& e) {
        std::cerr << "certification incomplete: " << e.what() << "\n";
        return 1;
    }

    if (format == "csv") {
        write_out(flags, certificate_csv(cert));
    } else if (format == "json") {
        ReportDocument doc;
        doc.command = "certify";
        doc.parameters["space"] = space;
        doc.parameters["n_max"] = n_max;
        doc.parameters["mode"] = mode_s;
        doc.parameters["horizon"] = to_decimal(lim.horizon);
        doc.results["certificate"] = json_of(cert);
        emit_report(flags, doc);
    } else {
        usage_error("format must be json or csv");
    }
    return cert.all_verified() && cert.entries.size() == n_max ? 0 : 1;
}

// ------------------------------------------------------------- density ----

int cmd_density(const std::string& space, unsigned long window, const CommonFlags& flags) {
    StreamKind kind = parse_space(space);
    check_window(window, flags);
    if (kind == StreamKind::bi_infinite && !flags.unsafe && 2 * window + 1 > kMaxWindow)
        usage_error("bi-infinite resolution " + std::to_string(window) +
                    " means patterns of length 2r+1; pass --unsafe-limits to override");
    DensityReport rep = density_check(star_for(kind), static_cast<unsigned>(window));
    ReportDocument doc;
    doc.command = "density";
    doc.parameters["space"] = space;
    doc.parameters["window"] = window;
    doc.results["density"] = json_of(rep);
    emit_report(flags, doc);
    return rep.all_found ? 0 : 1;
}

// ------------------------------------------------------------- poisson ----

int cmd_poisson(const std::string& space, const std::string& direction, unsigned n_max, const std::string& mode_s,
                const std::string& format, const CommonFlags& flags) {
    StreamKind kind = parse_space(space);
    check_depth(n_max, flags);
    if (direction != "positive" && direction != "negative") usage_error("direction must be positive or negative");
    if (mode_s != "minimal" && mode_s != "canonical") usage_error("mode must be minimal or canonical");
    ReturnMode mode = mode_s == "minimal" ? ReturnMode::minimal : ReturnMode::canonical;
    SearchLimits lim = limits_from(flags);
    if (direction == "negative" && kind != StreamKind::bi_infinite)
        usage_error("negative returns need the bi-infinite space");

    std::vector<PoissonEntry> entries;
    try {
        entries = direction == "positive" ? certify_poisson_positive(star_for(kind), n_max, mode, lim)
                                          : certify_poisson_negative(star_for(kind), n_max, mode, lim);
    } catch (const SearchExhausted& e) {
        std::cerr << "poisson search incomplete: " << e.what() << "\n";
        return 1;
    }

    if (format == "csv") {
        std::ostringstream os;
        os << "n,t\n";
        for (const auto& e : entries) os << e.depth << "," << to_decimal(e.time) << "\n";
        write_out(flags, os.str());
    } else {
        ReportDocument doc;
        doc.command = "poisson";
        doc.parameters["space"] = space;
        doc.parameters["direction"] = direction;
        doc.parameters["n_max"] = n_max;
        doc.parameters["mode"] = mode_s;
        doc.parameters["horizon"] = to_decimal(lim.horizon);
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back(json_of(e));
        doc.results["returns"] = arr;
        emit_report(flags, doc);
    }
    return entries.size() == n_max ? 0 : 1;
}

// --------------------------------------------------------- sensitivity ----

int cmd_sensitivity(const std::string& space, unsigned long delta_exponent, unsigned long samples,
                    const CommonFlags& flags) {
    StreamKind kind = parse_space(space);
    if (samples == 0) usage_error("samples must be at least 1");
    if (delta_exponent > 4096) usage_error("delta exponent is unreasonably large");
    SearchLimits lim = limits_from(flags);
    Dyadic delta = Dyadic::one_over_pow2(delta_exponent);

    ShiftSystem sys(star_for(kind));
    Json arr = Json::array();
    bool all_ok = true;
    for (unsigned long i = 0; i < samples; ++i) {
        auto w = sensitivity_witness_on_orbit(sys, Integer(static_cast<long>(i)), delta, lim);
        if (!w) {
            all_ok = false;
            continue;
        }
        Json e = Json::object();
        e["base_offset"] = to_decimal(w->base_offset);
        e["witness_shift"] = to_decimal(w->witness_shift);
        e["proximity_upper"] = json_of(w->proximity_upper);
        e["time"] = to_decimal(w->time);
        e["separation_lower_bound"] = json_of(w->separation_lower_bound);
        arr.push_back(e);
        if (w->separation_lower_bound < shift_epsilon0()) all_ok = false;
    }

    ReportDocument doc;
    doc.command = "sensitivity";
    doc.parameters["space"] = space;
    doc.parameters["delta"] = json_of(delta);
    doc.parameters["samples"] = samples;
    doc.results["epsilon0"] = json_of(shift_epsilon0());
    doc.results["witnesses"] = arr;
    doc.results["all_separated"] = all_ok;
    emit_report(flags, doc);
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------------ logistic ----

LogisticSystem logistic_from(const std::string& mu_s, const CommonFlags& flags) {
    Rational mu = parse_rational(mu_s);
    return LogisticSystem(mu, flags.precision);
}

int cmd_logistic_point(const std::string& mu_s, const std::string& word_s, const CommonFlags& flags) {
    FiniteWord w = parse_word(word_s);
    check_window(w.length(), flags);
    LogisticSystem sys = logistic_from(mu_s, flags);
    RatInterval box = point_for(sys, w);
    ReportDocument doc;
    doc.command = "logistic point";
    doc.parameters["mu"] = json_of(sys.mu());
    doc.parameters["word"] = w.str();
    doc.parameters["precision"] = flags.precision;
    doc.results["box"] = json_of(box);
    doc.results["width"] = json_of(box.width());
    emit_report(flags, doc);
    return 0;
}

int cmd_logistic_itinerary(const std::string& mu_s, const std::string& x_s, unsigned long length,
                           const CommonFlags& flags) {
    check_window(length, flags);
    LogisticSystem sys = logistic_from(mu_s, flags);
    RatInterval x = parse_interval(x_s);
    ItineraryResult it = itinerary(sys, x, static_cast<unsigned>(length));
    ReportDocument doc;
    doc.command = "logistic itinerary";
    doc.parameters["mu"] = json_of(sys.mu());
    doc.parameters["x"] = json_of(x);
    doc.parameters["length"] = length;
    doc.parameters["precision"] = flags.precision;
    doc.results["word"] = it.word.str();
    doc.results["decided"] = it.decided();
    if (it.undecided_at) doc.results["undecided_at"] = *it.undecided_at;
    emit_report(flags, doc);
    return it.decided() ? 0 : 1;
}

int cmd_logistic_transport(const std::string& mu_s, unsigned long depth, const CommonFlags& flags) {
    check_window(depth, flags);
    LogisticSystem sys = logistic_from(mu_s, flags);
    RatInterval box = transport_unpredictable_point(sys, static_cast<unsigned>(depth));
    ReportDocument doc;
    doc.command = "logistic transport";
    doc.parameters["mu"] = json_of(sys.mu());
    doc.parameters["depth"] = depth;
    doc.parameters["precision"] = flags.precision;
    doc.results["box"] = json_of(box);
    doc.results["width"] = json_of(box.width());
    emit_report(flags, doc);
    return 0;
}

int cmd_logistic_commute(const std::string& mu_s, unsigned long length, unsigned long samples,
                         const CommonFlags& flags) {
    check_window(length, flags);
    LogisticSystem sys = logistic_from(mu_s, flags);
    CommutationReport rep =
        conjugacy_commutation_check(sys, static_cast<unsigned>(length), static_cast<unsigned>(samples));
    ReportDocument doc;
    doc.command = "logistic commute";
    doc.parameters["mu"] = json_of(sys.mu());
    doc.parameters["length"] = length;
    doc.parameters["samples"] = samples;
    doc.parameters["precision"] = flags.precision;
    doc.results["checked"] = rep.checked;
    doc.results["failures"] = rep.failures;
    Json failed = Json::array();
    for (const auto& w : rep.failed_words) failed.push_back(w.str());
    doc.results["failed_words"] = failed;
    doc.results["passed"] = rep.passed;
    emit_report(flags, doc);
    return rep.passed ? 0 : 1;
}

// --------------------------------------------------------------- henon ----

int cmd_henon(const std::string& alpha_s, const std::string& beta_s, unsigned long steps,
              const CommonFlags& flags) {
    Rational alpha = parse_rational(alpha_s);
    Rational beta = parse_rational(beta_s);
    bool region_ok = henon_region_check(alpha, beta);   // throws on beta = 0

    ReportDocument doc;
    doc.command = "henon";
    doc.parameters["alpha"] = json_of(alpha);
    doc.parameters["beta"] = json_of(beta);
    doc.parameters["steps"] = steps;
    doc.results["region_ok"] = region_ok;
    if (steps > 0) {
        if (!flags.unsafe && steps > 64)
            usage_error("step count exceeds the guardrail 64; pass --unsafe-limits to override");
        Json traj = Json::array();
        Box2 p{RatInterval(Rational(0)), RatInterval(Rational(0))};
        traj.push_back(json_of(p));
        for (unsigned long i = 0; i < steps; ++i) {
            p = henon_step(alpha, beta, p);
            traj.push_back(json_of(p));
        }
        doc.results["trajectory"] = traj;
    }
    emit_report(flags, doc);
    if (steps == 0) return region_ok ? 0 : 1;
    return 0;   // iteration permitted outside the region; the flag is the warning
}

// ----------------------------------------------------------- horseshoe ----

HorseshoeSystem horseshoe_from(const std::string& lambda_s, const std::string& mu_s) {
    return HorseshoeSystem(parse_rational(lambda_s), parse_rational(mu_s));
}

int cmd_horseshoe_box(const std::string& word_s, const std::string& lambda_s, const std::string& mu_s,
                      const CommonFlags& flags) {
    TwoSidedWord w;
    try {
        w = TwoSidedWord::parse(word_s);
    } catch (const std::invalid_argument& e) {
        usage_error(e.what());
    }
    check_window(std::max<std::size_t>(1, w.past.length() + w.future.length()), flags);
    HorseshoeSystem sys = horseshoe_from(lambda_s, mu_s);
    Box2 box = horseshoe_box_for(sys, w);
    ReportDocument doc;
    doc.command = "horseshoe box";
    doc.parameters["word"] = w.str();
    doc.parameters["lambda"] = json_of(sys.lambda());
    doc.parameters["mu_e"] = json_of(sys.mu_e());
    doc.results["box"] = json_of(box);
    doc.results["x_width"] = json_of(box.x.width());
    doc.results["y_width"] = json_of(box.y.width());
    emit_report(flags, doc);
    return 0;
}

int cmd_horseshoe_itinerary(const std::string& x_s, const std::string& y_s, unsigned long fwd, unsigned long bwd,
                            const std::string& lambda_s, const std::string& mu_s, const CommonFlags& flags) {
    check_window(std::max(1UL, fwd + bwd), flags);
    HorseshoeSystem sys = horseshoe_from(lambda_s, mu_s);
    Box2 p{parse_interval(x_s), parse_interval(y_s)};
    HorseshoeItinerary it =
        horseshoe_itinerary(sys, p, static_cast<unsigned>(fwd), static_cast<unsigned>(bwd));
    TwoSidedWord w{it.backward, it.forward};
    ReportDocument doc;
    doc.command = "horseshoe itinerary";
    doc.parameters["box"] = json_of(p);
    doc.parameters["forward"] = fwd;
    doc.parameters["backward"] = bwd;
    doc.parameters["lambda"] = json_of(sys.lambda());
    doc.parameters["mu_e"] = json_of(sys.mu_e());
    doc.results["word"] = w.str();
    doc.results["decided"] = it.decided();
    if (it.forward_undecided_at) doc.results["forward_undecided_at"] = *it.forward_undecided_at;
    if (it.backward_undecided_at) doc.results["backward_undecided_at"] = *it.backward_undecided_at;
    emit_report(flags, doc);
    return it.decided() ? 0 : 1;
}

int cmd_horseshoe_roundtrip(const std::string& word_s, const std::string& lambda_s, const std::string& mu_s,
                            const CommonFlags& flags) {
    TwoSidedWord w;
    try {
        w = TwoSidedWord::parse(word_s);
    } catch (const std::invalid_argument& e) {
        usage_error(e.what());
    }
    check_window(std::max<std::size_t>(1, w.past.length() + w.future.length()), flags);
    HorseshoeSystem sys = horseshoe_from(lambda_s, mu_s);
    Box2 box = horseshoe_box_for(sys, w);
    HorseshoeItinerary it = horseshoe_itinerary(sys, box, static_cast<unsigned>(w.future.length()),
                                                static_cast<unsigned>(w.past.length()));
    TwoSidedWord rec{it.backward, it.forward};
    bool match = it.decided() && rec.past == w.past && rec.future == w.future;
    ReportDocument doc;
    doc.command = "horseshoe roundtrip";
    doc.parameters["word"] = w.str();
    doc.parameters["lambda"] = json_of(sys.lambda());
    doc.parameters["mu_e"] = json_of(sys.mu_e());
    doc.results["box"] = json_of(box);
    doc.results["recovered"] = rec.str();
    doc.results["match"] = match;
    emit_report(flags, doc);
    return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"listed-sequence construction and certification toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;

    // gen
    auto* gen = app.add_subcommand("gen", "print a window of the listed sequence");
    std::string g_space, g_start;
    long g_count = 0;
    bool g_annotate = false;
    std::string g_format = "text";
    gen->add_option("space,--space", g_space, "one-sided or bi-infinite")->required();
    gen->add_option("start,--start", g_start, "first index")->required();
    gen->add_option("count,--count", g_count, "number of symbols")->required();
    gen->add_flag("--annotate", g_annotate, "mark block boundaries with spaces");
    gen->add_option("--format", g_format, "text or json")->capture_default_str();
    add_common(gen, flags);

    // certify
    auto* cert = app.add_subcommand("certify", "verified return/separation certificate");
    std::string c_space, c_mode = "minimal", c_format = "json";
    unsigned c_nmax = 0;
    cert->add_option("space,--space", c_space, "one-sided or bi-infinite")->required();
    cert->add_option("n-max,--n-max", c_nmax, "certificate depth")->required();
    cert->add_option("mode,--mode", c_mode, "minimal or canonical")->capture_default_str();
    cert->add_option("format,--format", c_format, "json or csv")->capture_default_str();
    add_common(cert, flags);

    // density
    auto* dens = app.add_subcommand("density", "every word appears at a verified shift");
    std::string d_space;
    unsigned long d_window = 0;
    dens->add_option("space,--space", d_space, "one-sided or bi-infinite")->required();
    dens->add_option("window,--window", d_window, "word length (one-sided) or pattern radius (bi-infinite)")
        ->required();
    add_common(dens, flags);

    // poisson
    auto* poi = app.add_subcommand("poisson", "forward/backward return-time table");
    std::string p_space, p_direction, p_mode = "minimal", p_format = "json";
    unsigned p_nmax = 0;
    poi->add_option("space,--space", p_space, "one-sided or bi-infinite")->required();
    poi->add_option("direction,--direction", p_direction, "positive or negative")->required();
    poi->add_option("n-max,--n-max", p_nmax, "table depth")->required();
    poi->add_option("--mode", p_mode, "minimal or canonical")->capture_default_str();
    poi->add_option("--format", p_format, "json or csv")->capture_default_str();
    add_common(poi, flags);

    // sensitivity
    auto* sens = app.add_subcommand("sensitivity", "orbit-point sensitivity witnesses");
    std::string s_space;
    unsigned long s_exp = 0, s_samples = 0;
    sens->add_option("space,--space", s_space, "one-sided or bi-infinite")->required();
    sens->add_option("delta-exponent,--delta-exponent", s_exp, "delta = 2^-e")->required();
    sens->add_option("samples,--samples", s_samples, "orbit points to witness")->required();
    add_common(sens, flags);

    // logistic
    auto* logi = app.add_subcommand("logistic", "quadratic-family conjugacy tools");
    logi->require_subcommand(1);
    std::string l_mu, l_word, l_x;
    unsigned long l_len = 0, l_samples = 0, l_depth = 0;

    auto* l_point = logi->add_subcommand("point", "cylinder enclosure for a word");
    l_point->add_option("mu,--mu", l_mu, "parameter > 4, as a rational")->required();
    l_point->add_option("word,--word", l_word, "itinerary prefix")->required();
    l_point->add_option("--precision", flags.precision, "square-root precision bits")->capture_default_str();
    add_common(l_point, flags);

    auto* l_itin = logi->add_subcommand("itinerary", "branch symbols of a box orbit");
    l_itin->add_option("mu,--mu", l_mu, "parameter > 4, as a rational")->required();
    l_itin->add_option("x,--x", l_x, "start, 'a/b' or 'lo:hi'")->required();
    l_itin->add_option("length,--length", l_len, "symbols to decide")->required();
    l_itin->add_option("--precision", flags.precision, "square-root precision bits")->capture_default_str();
    add_common(l_itin, flags);

    auto* l_trans = logi->add_subcommand("transport", "enclosure of the transported point");
    l_trans->add_option("mu,--mu", l_mu, "parameter > 4, as a rational")->required();
    l_trans->add_option("depth,--depth", l_depth, "listing prefix length")->required();
    l_trans->add_option("--precision", flags.precision, "square-root precision bits")->capture_default_str();
    add_common(l_trans, flags);

    auto* l_comm = logi->add_subcommand("commute", "finite-depth conjugacy commutation");
    l_comm->add_option("mu,--mu", l_mu, "parameter > 4, as a rational")->required();
    l_comm->add_option("length,--length", l_len, "word length")->required();
    l_comm->add_option("samples,--samples", l_samples, "random words to check")->required();
    l_comm->add_option("--precision", flags.precision, "square-root precision bits")->capture_default_str();
    add_common(l_comm, flags);

    // henon
    auto* hen = app.add_subcommand("henon", "parameter region check and box iteration");
    std::string h_alpha, h_beta;
    unsigned long h_steps = 0;
    hen->add_option("alpha,--alpha", h_alpha, "rational alpha")->required();
    hen->add_option("beta,--beta", h_beta, "rational beta, nonzero")->required();
    hen->add_option("steps,--steps", h_steps, "iterations from (0,0); 0 = region check only")->required();
    add_common(hen, flags);

    // horseshoe
    auto* horse = app.add_subcommand("horseshoe", "affine horseshoe coding tools");
    horse->require_subcommand(1);
    std::string hs_word, hs_x, hs_y, hs_lambda = "1/3", hs_mu = "3";
    unsigned long hs_fwd = 0, hs_bwd = 0;

    auto* hs_box = horse->add_subcommand("box", "box for a dotted word");
    hs_box->add_option("word,--word", hs_word, "two-sided word, e.g. 01.000")->required();
    hs_box->add_option("--lambda", hs_lambda, "contraction in (0, 1/2)")->capture_default_str();
    hs_box->add_option("--mu-e", hs_mu, "expansion > 2")->capture_default_str();
    add_common(hs_box, flags);

    auto* hs_itin = horse->add_subcommand("itinerary", "strip symbols of a box");
    hs_itin->add_option("x,--x", hs_x, "x interval, 'a/b' or 'lo:hi'")->required();
    hs_itin->add_option("y,--y", hs_y, "y interval")->required();
    hs_itin->add_option("forward,--forward", hs_fwd, "forward symbols")->required();
    hs_itin->add_option("backward,--backward", hs_bwd, "backward symbols")->required();
    hs_itin->add_option("--lambda", hs_lambda, "contraction in (0, 1/2)")->capture_default_str();
    hs_itin->add_option("--mu-e", hs_mu, "expansion > 2")->capture_default_str();
    add_common(hs_itin, flags);

    auto* hs_rt = horse->add_subcommand("roundtrip", "box_for then itinerary, compared");
    hs_rt->add_option("word,--word", hs_word, "two-sided word, e.g. 01.000")->required();
    hs_rt->add_option("--lambda", hs_lambda, "contraction in (0, 1/2)")->capture_default_str();
    hs_rt->add_option("--mu-e", hs_mu, "expansion > 2")->capture_default_str();
    add_common(hs_rt, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(g_space, g_start, g_count, g_annotate, g_format, flags);
        if (cert->parsed()) return cmd_certify(c_space, c_nmax, c_mode, c_format, flags);
        if (dens->parsed()) return cmd_density(d_space, d_window, flags);
        if (poi->parsed()) return cmd_poisson(p_space, p_direction, p_nmax, p_mode, p_format, flags);
        if (sens->parsed()) return cmd_sensitivity(s_space, s_exp, s_samples, flags);
        if (logi->parsed()) {
            if (l_point->parsed()) return cmd_logistic_point(l_mu, l_word, flags);
            if (l_itin->parsed()) return cmd_logistic_itinerary(l_mu, l_x, l_len, flags);
            if (l_trans->parsed()) return cmd_logistic_transport(l_mu, l_depth, flags);
            if (l_comm->parsed()) return cmd_logistic_commute(l_mu, l_len, l_samples, flags);
        }
        if (hen->parsed()) return cmd_henon(h_alpha, h_beta, h_steps, flags);
        if (horse->parsed()) {
            if (hs_box->parsed()) return cmd_horseshoe_box(hs_word, hs_lambda, hs_mu, flags);
            if (hs_itin->parsed())
                return cmd_horseshoe_itinerary(hs_x, hs_y, hs_fwd, hs_bwd, hs_lambda, hs_mu, flags);
            if (hs_rt->parsed()) return cmd_horseshoe_roundtrip(hs_word, hs_lambda, hs_mu, flags);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand executed\n";
    return 2;
}
