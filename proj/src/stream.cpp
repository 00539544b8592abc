#include "updyn/stream.hpp"

#include <limits>
#include <stdexcept>

namespace updyn {

namespace {

// Margin keeps offset + index additions overflow-free.
constexpr std::int64_t kFastBound = std::int64_t(1) << 62;

class LambdaRule final : public SymbolRule {
public:
    explicit LambdaRule(std::function<int(const Integer&)> fn) : fn_(std::move(fn)) {}
    int at(const Integer& i) const override {
        int s = fn_(i);
        if (s != 0 && s != 1) throw std::logic_error("stream rule produced a symbol outside {0,1}");
        return s;
    }

private:
    std::function<int(const Integer&)> fn_;
};

}  // namespace

SymbolStream::SymbolStream(StreamKind kind, std::shared_ptr<const SymbolRule> rule, std::string description)
    : kind_(kind), rule_(std::move(rule)), offset_(0), desc_(std::move(description)) {
    if (!rule_) throw std::invalid_argument("stream requires a rule");
}

int SymbolStream::symbol(const Integer& i) const {
    if (kind_ == StreamKind::one_sided && i < 0) {
        throw std::domain_error("one-sided stream queried at negative index");
    }
    return rule_->at(i + offset_);
}

bool SymbolStream::fast_ok(std::int64_t lo, std::int64_t hi) const {
    if (!offset_fits_i64_) return false;
    if (lo > hi) return true;
    if (offset_i64_ > kFastBound - hi && hi > 0) return false;
    if (offset_i64_ < -kFastBound - lo && lo < 0) return false;
    std::int64_t a = offset_i64_ + lo;
    std::int64_t b = offset_i64_ + hi;
    return a > -kFastBound && b < kFastBound;
}

SymbolStream shift(const SymbolStream& s, const Integer& t) {
    SymbolStream r = s;
    r.offset_ += t;
    if (s.kind_ == StreamKind::one_sided && r.offset_ < 0) {
        throw std::domain_error("shift would give a one-sided stream a negative offset");
    }
    auto small = to_i64(r.offset_);
    r.offset_fits_i64_ = small.has_value() && *small > -kFastBound && *small < kFastBound;
    r.offset_i64_ = r.offset_fits_i64_ ? *small : 0;
    return r;
}

SymbolStream make_stream(StreamKind kind, std::function<int(const Integer&)> fn, std::string description) {
    return SymbolStream(kind, std::make_shared<LambdaRule>(std::move(fn)), std::move(description));
}

}  // namespace updyn
