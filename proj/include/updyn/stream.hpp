#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "updyn/integer.hpp"

namespace updyn {

enum class StreamKind { one_sided, bi_infinite };

inline const char* to_string(StreamKind k) {
    return k == StreamKind::one_sided ? "one-sided" : "bi-infinite";
}

// A deterministic total rule index -> {0,1}. Rules must be pure: repeated
// queries at the same index return the same symbol.
class SymbolRule {
public:
    virtual ~SymbolRule() = default;

    virtual int at(const Integer& i) const = 0;

    // Hot-path entry used by the scan kernels. Must agree with at() on every
    // index where both are defined. The default just routes through at().
    virtual int at_i64(std::int64_t i) const { return at(Integer(static_cast<long>(i))); }
};

// An index-addressable infinite binary sequence: a rule plus a shift offset.
// Immutable value type; shifting produces a new view in O(1) without copying
// the rule. Symbol at i equals rule(i + offset).
class SymbolStream {
public:
    SymbolStream(StreamKind kind, std::shared_ptr<const SymbolRule> rule, std::string description);

    StreamKind kind() const { return kind_; }
    const Integer& offset() const { return offset_; }
    const std::string& description() const { return desc_; }
    const SymbolRule& rule() const { return *rule_; }
    std::shared_ptr<const SymbolRule> rule_ptr() const { return rule_; }

    // One-sided streams reject negative indices.
    int symbol(const Integer& i) const;

    // Caller must have checked fast_ok() for the index range in play.
    int symbol_i64(std::int64_t i) const { return rule_->at_i64(i + offset_i64_); }

    // True when offset + [lo, hi] stays well inside int64 range.
    bool fast_ok(std::int64_t lo, std::int64_t hi) const;

    friend SymbolStream shift(const SymbolStream& s, const Integer& t);

private:
    StreamKind kind_;
    std::shared_ptr<const SymbolRule> rule_;
    Integer offset_;
    std::int64_t offset_i64_ = 0;   // valid only when offset fits
    bool offset_fits_i64_ = true;
    std::string desc_;
};

// sigma^t as a shifted view. Offsets compose additively:
// shift(shift(s, a), b) has offset a + b over the same rule.
// One-sided streams require a non-negative resulting offset.
SymbolStream shift(const SymbolStream& s, const Integer& t);

// Wraps a plain function as a stream.
SymbolStream make_stream(StreamKind kind, std::function<int(const Integer&)> fn, std::string description);

}  // namespace updyn
