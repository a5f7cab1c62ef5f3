#pragma once

#include <cstddef>
#include <vector>

#include "equisub/core.hpp"

namespace equisub {

/// Indices (original, ascending) of a nonempty subsequence whose sum is 0 mod `modulus`.
struct ZeroSumCertificate {
    std::vector<std::size_t> indices;
    Modulus modulus;
    BigInt sum;
};

/// Pigeonhole on partial sums. With s_0 = 0 and s_k the k-th partial sum mod N,
/// picks the smallest j whose s_j repeats an earlier s_i and returns the block
/// i+1..j (positions in `seq`). Throws LengthError if seq is shorter than N.
[[nodiscard]] ZeroSumCertificate find_zero_subsum(const IntSequence& seq, const Modulus& n);

/// Repeatedly removes the block found by find_zero_subsum from the residual
/// (relative order preserved) until fewer than N terms remain. The union of
/// removed blocks has more than T - N elements and sum 0 mod N.
[[nodiscard]] ZeroSumCertificate extract_zero_union(const IntSequence& seq, const Modulus& n);

}  // namespace equisub
