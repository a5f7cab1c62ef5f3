#pragma once

#include <cstddef>
#include <vector>

#include "equisub/core.hpp"

namespace equisub {

/// c_n = a_i + a_j for a pair of terms with a_i = +/- a_j (mod 2N).
struct Pair {
    std::size_t first = 0;   // i_n, the smaller original index
    std::size_t second = 0;  // j_n
    BigInt sum;              // c_n, the actual integer sum
};

/// The auxiliary c-sequence. pairs[0, zero_class_start) have both members
/// nonzero mod 2N, pairs[zero_class_start, size) both members 0 mod 2N.
struct PairedSequence {
    std::vector<Pair> pairs;
    std::vector<std::size_t> leftovers;  // ascending
    std::size_t zero_class_start = 0;    // V
    Modulus modulus;

    [[nodiscard]] std::size_t size() const noexcept { return pairs.size(); }  // T

    /// The c-values as a sequence indexed 1..T by pair position.
    [[nodiscard]] IntSequence c_sequence() const;

    /// Whether at most N terms were left unpaired (the bound N+1 always holds).
    [[nodiscard]] bool within_n_leftovers() const noexcept {
        return leftovers.size() <= static_cast<std::size_t>(modulus.value());
    }
};

/// Groups terms by +/- class mod 2N and pairs consecutive members of each
/// group in index order; odd-sized groups leave their last member over.
[[nodiscard]] PairedSequence build_pairing(const IntSequence& seq, const Modulus& n);

}  // namespace equisub
