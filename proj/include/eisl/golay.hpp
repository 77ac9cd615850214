#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eisl/field.hpp"

namespace eisl {

/// The extended ternary Golay code [12, 6, 6]: the length-11 quadratic-residue
/// cyclic code over F_3 extended by a sum-zero coordinate.  Self-dual, 729
/// words, weights {0, 6, 9, 12}; contains the all-ones word.
class GolayTernary {
public:
    GolayTernary();

    const std::array<std::array<int, 12>, 6>& generators() const { return gen_; }

    /// Membership via self-duality: c in C iff G c^T = 0.
    bool contains(const std::array<int, 12>& word) const;

    /// All 729 codewords (entries 0, 1, 2).
    std::vector<std::array<int, 12>> allWords() const;

    /// Verifies 729 words, self-duality, weight set {0,6,9,12}, min weight 6,
    /// all-ones membership.  Throws MathError on any failure.
    void verify() const;

private:
    std::array<std::array<int, 12>, 6> gen_;
};

}  // namespace eisl
