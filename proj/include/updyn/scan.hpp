#pragma once

#include <optional>
#include <vector>

#include "updyn/stream.hpp"

namespace updyn {

// Inclusive scan range. Forward scans walk first..last upward; backward
// scans walk first..last downward (first >= last).
struct ScanRange {
    Integer first;
    Integer last;
};

// Least t in the range such that sigma^t(s) agrees with s on the whole
// certification window: indices [0, n] one-sided, [-n, n] bi-infinite.
//
// The _serial variants are the reference implementations; the undecorated
// entry points use the OpenMP kernel on the int64 fast path when the range
// allows it and fall back to the reference otherwise. Results are identical
// by contract (and checked by test).
std::optional<Integer> first_window_return_serial(const SymbolStream& s, unsigned n, const ScanRange& range);
std::optional<Integer> first_window_return(const SymbolStream& s, unsigned n, const ScanRange& range);

// Same window condition, scanning downward through negative shifts.
std::optional<Integer> first_window_return_backward_serial(const SymbolStream& s, unsigned n,
                                                           const ScanRange& range);
std::optional<Integer> first_window_return_backward(const SymbolStream& s, unsigned n, const ScanRange& range);

// Least index j in the range with a(j) != b(j).
std::optional<Integer> first_difference_serial(const SymbolStream& a, const SymbolStream& b,
                                               const ScanRange& range);
std::optional<Integer> first_difference(const SymbolStream& a, const SymbolStream& b, const ScanRange& range);

// For each period q: least i in the range with s(i) != s(i+q), i.e. a
// witness that s is not q-periodic on the scanned stretch. The parallel
// variant distributes the periods across threads.
std::vector<std::optional<Integer>> aperiodicity_witnesses_serial(const SymbolStream& s,
                                                                  const std::vector<unsigned long>& periods,
                                                                  const ScanRange& range);
std::vector<std::optional<Integer>> aperiodicity_witnesses(const SymbolStream& s,
                                                           const std::vector<unsigned long>& periods,
                                                           const ScanRange& range);

// True when this build dispatches the undecorated entry points to OpenMP.
bool scan_uses_openmp();

}  // namespace updyn
