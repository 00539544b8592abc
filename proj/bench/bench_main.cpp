// Compares the OpenMP scan kernels against their serial references on the
// hot certification workloads. Results must match exactly; the timing
// difference is the point of the exercise.

#include <chrono>
#include <cstdio>
#include <string>

#include "updyn/scan.hpp"
#include "updyn/star.hpp"

using namespace updyn;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

std::string show(const std::optional<Integer>& v) { return v ? to_decimal(*v) : std::string("none"); }

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("scan kernels: %s\n", scan_uses_openmp() ? "OpenMP build" : "serial build");
    std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "parallel", "speedup");

    {
        SymbolStream s = bi_infinite_star();
        ScanRange range{Integer(1), Integer(1) << 21};
        auto t0 = std::chrono::steady_clock::now();
        auto a = first_window_return_serial(s, 8, range);
        double ser = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = first_window_return(s, 8, range);
        double par = ms_since(t0);
        row("window return (bi, n=8)", ser, par, a == b);
        std::printf("    first return: %s\n", show(a).c_str());
    }

    {
        SymbolStream s = one_sided_star();
        ScanRange range{Integer(1), Integer(1) << 22};
        auto t0 = std::chrono::steady_clock::now();
        auto a = first_window_return_serial(s, 12, range);
        double ser = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = first_window_return(s, 12, range);
        double par = ms_since(t0);
        row("window return (1s, n=12)", ser, par, a == b);
        std::printf("    first return: %s\n", show(a).c_str());
    }

    {
        SymbolStream s = one_sided_star();
        SymbolStream r = shift(s, Integer(1) << 18);
        ScanRange range{Integer(0), Integer(1) << 22};
        auto t0 = std::chrono::steady_clock::now();
        auto a = first_difference_serial(s, r, range);
        double ser = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = first_difference(s, r, range);
        double par = ms_since(t0);
        row("first difference", ser, par, a == b);
    }

    {
        SymbolStream s = bi_infinite_star();
        std::vector<unsigned long> periods;
        for (unsigned long q = 1; q <= 16; ++q) periods.push_back(q);
        ScanRange range{Integer(0), Integer(1) << 18};
        auto t0 = std::chrono::steady_clock::now();
        auto a = aperiodicity_witnesses_serial(s, periods, range);
        double ser = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = aperiodicity_witnesses(s, periods, range);
        double par = ms_since(t0);
        row("aperiodicity (q <= 16)", ser, par, a == b);
    }

    return 0;
}
