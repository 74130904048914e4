#include "cyclonorm/sequence.hpp"

#include <algorithm>
#include <string>

#include "cyclonorm/core_arith.hpp"

namespace cyclonorm {

SequenceSpec::SequenceSpec(std::uint64_t base, std::vector<int> digits)
    : base_(base)
    , digits_(std::move(digits))
{
    if (base_ < 2) {
        throw InvalidInput("base must be at least 2, got " + std::to_string(base_));
    }
    if (digits_.size() != base_) {
        throw InvalidInput("base " + std::to_string(base_) + " needs " + std::to_string(base_)
                           + " digit values, got " + std::to_string(digits_.size()));
    }
    for (int t : digits_) {
        if (t < -1 || t > 1) {
            throw InvalidInput("digit value " + std::to_string(t) + " is outside {-1, 0, 1}");
        }
    }
    const bool all_zero = std::all_of(digits_.begin(), digits_.end(), [](int t) { return t == 0; });
    if (digits_[0] != 1 && !all_zero) {
        throw InvalidInput("t_0 must be 1 unless the sequence is identically zero");
    }
}

std::vector<std::uint64_t> SequenceSpec::nonzero_positions() const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 1; c < base_; ++c) {
        if (digits_[c] != 0) {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace cyclonorm
