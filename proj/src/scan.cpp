#include "updyn/scan.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace updyn {

namespace {

constexpr std::int64_t kChunk = std::int64_t(1) << 17;

// Window offsets in check order: origin first, then outward. The origin
// symbol disagrees for about half of all candidate shifts, so checking it
// first keeps the per-candidate cost near two symbol reads.
std::vector<std::int64_t> window_offsets(StreamKind kind, unsigned n) {
    std::vector<std::int64_t> offs;
    offs.reserve(kind == StreamKind::one_sided ? n + 1 : 2 * n + 1);
    offs.push_back(0);
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i) {
        offs.push_back(i);
        if (kind == StreamKind::bi_infinite) offs.push_back(-i);
    }
    return offs;
}

std::vector<int> window_symbols(const SymbolStream& s, const std::vector<std::int64_t>& offs) {
    std::vector<int> sym(offs.size());
    for (std::size_t k = 0; k < offs.size(); ++k) sym[k] = s.symbol(Integer(static_cast<long>(offs[k])));
    return sym;
}

bool range_fits_i64(const ScanRange& r, std::int64_t& first, std::int64_t& last) {
    auto a = to_i64(r.first);
    auto b = to_i64(r.last);
    if (!a || !b) return false;
    first = *a;
    last = *b;
    return true;
}

bool match_at(const SymbolStream& s, const std::vector<std::int64_t>& offs, const std::vector<int>& sym,
              std::int64_t t) {
    for (std::size_t k = 0; k < offs.size(); ++k) {
        if (s.symbol_i64(t + offs[k]) != sym[k]) return false;
    }
    return true;
}

std::optional<Integer> return_scan_i64_serial(const SymbolStream& s, const std::vector<std::int64_t>& offs,
                                              const std::vector<int>& sym, std::int64_t first, std::int64_t last,
                                              int dir) {
    for (std::int64_t t = first; dir > 0 ? t <= last : t >= last; t += dir) {
        if (match_at(s, offs, sym, t)) return Integer(static_cast<long>(t));
    }
    return std::nullopt;
}

std::optional<Integer> return_scan_i64_parallel(const SymbolStream& s, const std::vector<std::int64_t>& offs,
                                                const std::vector<int>& sym, std::int64_t first, std::int64_t last,
                                                int dir) {
    std::int64_t total = dir > 0 ? last - first + 1 : first - last + 1;
    if (total <= 0) return std::nullopt;
    for (std::int64_t base = 0; base < total; base += kChunk) {
        std::int64_t count = std::min(kChunk, total - base);
        std::int64_t found = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : found)
        for (std::int64_t k = 0; k < count; ++k) {
            std::int64_t t = first + dir * (base + k);
            if (match_at(s, offs, sym, t)) found = std::min(found, k);
        }
        if (found != std::numeric_limits<std::int64_t>::max()) {
            return Integer(static_cast<long>(first + dir * (base + found)));
        }
    }
    return std::nullopt;
}

std::optional<Integer> return_scan_big(const SymbolStream& s, unsigned n, const ScanRange& range, int dir) {
    auto offs = window_offsets(s.kind(), n);
    auto sym = window_symbols(s, offs);
    Integer t = range.first;
    while (dir > 0 ? t <= range.last : t >= range.last) {
        bool ok = true;
        for (std::size_t k = 0; k < offs.size(); ++k) {
            if (s.symbol(t + offs[k]) != sym[k]) {
                ok = false;
                break;
            }
        }
        if (ok) return t;
        t += dir;
    }
    return std::nullopt;
}

std::optional<Integer> return_scan(const SymbolStream& s, unsigned n, const ScanRange& range, int dir,
                                   bool parallel) {
    std::int64_t first = 0;
    std::int64_t last = 0;
    std::int64_t span = static_cast<std::int64_t>(n);
    if (range_fits_i64(range, first, last) && s.fast_ok(std::min(first, last) - span, std::max(first, last) + span)) {
        auto offs = window_offsets(s.kind(), n);
        auto sym = window_symbols(s, offs);
        return parallel ? return_scan_i64_parallel(s, offs, sym, first, last, dir)
                        : return_scan_i64_serial(s, offs, sym, first, last, dir);
    }
    return return_scan_big(s, n, range, dir);
}

}  // namespace

std::optional<Integer> first_window_return_serial(const SymbolStream& s, unsigned n, const ScanRange& range) {
    if (range.first > range.last) return std::nullopt;
    return return_scan(s, n, range, +1, false);
}

std::optional<Integer> first_window_return(const SymbolStream& s, unsigned n, const ScanRange& range) {
    if (range.first > range.last) return std::nullopt;
    return return_scan(s, n, range, +1, scan_uses_openmp());
}

std::optional<Integer> first_window_return_backward_serial(const SymbolStream& s, unsigned n,
                                                           const ScanRange& range) {
    if (range.first < range.last) return std::nullopt;
    return return_scan(s, n, range, -1, false);
}

std::optional<Integer> first_window_return_backward(const SymbolStream& s, unsigned n, const ScanRange& range) {
    if (range.first < range.last) return std::nullopt;
    return return_scan(s, n, range, -1, scan_uses_openmp());
}

namespace {

std::optional<Integer> difference_scan(const SymbolStream& a, const SymbolStream& b, const ScanRange& range,
                                       bool parallel) {
    if (range.first > range.last) return std::nullopt;
    std::int64_t first = 0;
    std::int64_t last = 0;
    if (range_fits_i64(range, first, last) && a.fast_ok(first, last) && b.fast_ok(first, last)) {
        if (!parallel) {
            for (std::int64_t j = first; j <= last; ++j) {
                if (a.symbol_i64(j) != b.symbol_i64(j)) return Integer(static_cast<long>(j));
            }
            return std::nullopt;
        }
        for (std::int64_t base = first; base <= last; base += kChunk) {
            std::int64_t hi = std::min(last, base + kChunk - 1);
            std::int64_t found = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : found)
            for (std::int64_t j = base; j <= hi; ++j) {
                if (a.symbol_i64(j) != b.symbol_i64(j)) found = std::min(found, j);
            }
            if (found != std::numeric_limits<std::int64_t>::max()) return Integer(static_cast<long>(found));
        }
        return std::nullopt;
    }
    for (Integer j = range.first; j <= range.last; ++j) {
        if (a.symbol(j) != b.symbol(j)) return j;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Integer> first_difference_serial(const SymbolStream& a, const SymbolStream& b,
                                               const ScanRange& range) {
    return difference_scan(a, b, range, false);
}

std::optional<Integer> first_difference(const SymbolStream& a, const SymbolStream& b, const ScanRange& range) {
    return difference_scan(a, b, range, scan_uses_openmp());
}

namespace {

std::optional<Integer> period_witness(const SymbolStream& s, unsigned long q, const ScanRange& range) {
    std::int64_t first = 0;
    std::int64_t last = 0;
    std::int64_t step = static_cast<std::int64_t>(q);
    if (range_fits_i64(range, first, last) && s.fast_ok(first, last + step)) {
        for (std::int64_t i = first; i <= last; ++i) {
            if (s.symbol_i64(i) != s.symbol_i64(i + step)) return Integer(static_cast<long>(i));
        }
        return std::nullopt;
    }
    for (Integer i = range.first; i <= range.last; ++i) {
        if (s.symbol(i) != s.symbol(i + Integer(static_cast<long>(q)))) return i;
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::optional<Integer>> aperiodicity_witnesses_serial(const SymbolStream& s,
                                                                  const std::vector<unsigned long>& periods,
                                                                  const ScanRange& range) {
    std::vector<std::optional<Integer>> out(periods.size());
    for (std::size_t k = 0; k < periods.size(); ++k) out[k] = period_witness(s, periods[k], range);
    return out;
}

std::vector<std::optional<Integer>> aperiodicity_witnesses(const SymbolStream& s,
                                                           const std::vector<unsigned long>& periods,
                                                           const ScanRange& range) {
    std::vector<std::optional<Integer>> out(periods.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < periods.size(); ++k) out[k] = period_witness(s, periods[k], range);
    return out;
}

bool scan_uses_openmp() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace updyn
