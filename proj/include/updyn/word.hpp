#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "updyn/integer.hpp"

namespace updyn {

// A finite block of 0/1 symbols, the atom of the listed-sequence constructions.
class FiniteWord {
public:
    FiniteWord() = default;
    explicit FiniteWord(std::string_view s);
    explicit FiniteWord(std::vector<std::uint8_t> bits);

    // Binary representation of `value`, zero-padded on the left to `length`.
    // Requires value < 2^length.
    static FiniteWord from_value(const Integer& value, std::size_t length);

    std::size_t length() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int symbol(std::size_t i) const { return bits_.at(i); }

    void push_back(int bit);
    FiniteWord prefix(std::size_t n) const;
    FiniteWord suffix_from(std::size_t n) const;

    // Value of the word read as a binary numeral, most significant symbol first.
    Integer value() const;

    std::string str() const;

    bool operator==(const FiniteWord& o) const { return bits_ == o.bits_; }
    bool operator!=(const FiniteWord& o) const { return bits_ != o.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace updyn
