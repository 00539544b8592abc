#include "updyn/word.hpp"

#include <stdexcept>

namespace updyn {

FiniteWord::FiniteWord(std::string_view s) {
    bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("word symbols must be 0 or 1, got '" + std::string(1, c) + "'");
        }
        bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

FiniteWord::FiniteWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("word symbols must be 0 or 1");
    }
}

FiniteWord FiniteWord::from_value(const Integer& value, std::size_t length) {
    if (value < 0 || value >= pow2(static_cast<unsigned long>(length))) {
        throw std::domain_error("from_value: value out of range for length");
    }
    std::vector<std::uint8_t> bits(length);
    for (std::size_t p = 0; p < length; ++p) {
        bits[p] = static_cast<std::uint8_t>(bit_of(value, static_cast<unsigned long>(length - 1 - p)));
    }
    return FiniteWord(std::move(bits));
}

void FiniteWord::push_back(int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("word symbols must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(bit));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
    if (n > bits_.size()) throw std::out_of_range("prefix longer than word");
    return FiniteWord(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

FiniteWord FiniteWord::suffix_from(std::size_t n) const {
    if (n > bits_.size()) throw std::out_of_range("suffix start past end of word");
    return FiniteWord(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(n), bits_.end()));
}

Integer FiniteWord::value() const {
    Integer v = 0;
    for (auto b : bits_) {
        v <<= 1;
        if (b) v |= 1;
    }
    return v;
}

std::string FiniteWord::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

}  // namespace updyn
