#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyclonorm {

/// Raised for digit configurations the triangle method cannot express
/// (three or more nonzero digits, or a nonzero digit at a position = 0 mod p).
class UnsupportedSequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Strongly b-multiplicative sequence with values in {-1, 0, 1}: t_n is the
/// product of the digit values t_c over the base-b expansion of n.
/// Either t_0 = 1 or every digit value is 0.
class SequenceSpec {
public:
    SequenceSpec(std::uint64_t base, std::vector<int> digits);

    static SequenceSpec thue_morse() { return SequenceSpec(2, {1, -1}); }

    [[nodiscard]] std::uint64_t base() const noexcept { return base_; }
    [[nodiscard]] const std::vector<int>& digits() const noexcept { return digits_; }
    [[nodiscard]] int digit(std::uint64_t c) const { return digits_.at(c); }
    [[nodiscard]] bool identically_zero() const noexcept { return digits_[0] == 0; }

    /// Positions c >= 1 with t_c != 0.
    [[nodiscard]] std::vector<std::uint64_t> nonzero_positions() const;

    friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

private:
    std::uint64_t base_;
    std::vector<int> digits_;
};

} // namespace cyclonorm
