#pragma once

// Counting subsets whose sum is 0 mod N.
//
// The exact route is a residue-class dynamic program over big integers. The
// analytic route evaluates the roots-of-unity filter
//
//     (1/N) * sum_{b<N} prod_j (1 + e^{2 pi i b a_j / N})
//
// and, when the total sum is 0 mod 2N, its cosine form
//
//     (2^L/N) * sum_{b<N} prod_j cos(pi b a_j / N).
//
// Both analytic evaluators are floating point and serve as cross-checks only.
// All counts include the empty subset unless stated otherwise.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "equisub/core.hpp"

namespace equisub {

enum class EmptySubset { include, exclude };

struct CountReport {
    Modulus modulus;
    std::vector<BigInt> counts;  // counts[r] = #subsets with sum = r (mod N)
    std::size_t length = 0;
};

/// prod_j cos(pi b a_j / N) for every b, plus the regrouped class multiplicities.
struct CosineTermVector {
    Modulus modulus;
    std::size_t length = 0;
    std::vector<double> terms;
    /// multiplicities[b][n] = #{j : b a_j = +/- n (mod 2N)}, n in [0, N].
    std::vector<std::vector<std::size_t>> multiplicities;

    /// Every class n in 1..N has even multiplicity for this b, so each
    /// cos(pi n / N) factor appears squared.
    [[nodiscard]] bool all_classes_even(std::size_t b) const;
    /// Sign of the regrouped product read off the multiplicities: true when it
    /// contains a zero factor or an even number of negative factors.
    [[nodiscard]] bool structurally_nonnegative(std::size_t b) const;
    /// (2^L / N) * sum_b terms[b].
    [[nodiscard]] double reconstructed_count() const;
};

[[nodiscard]] CountReport count_by_residue(const IntSequence& seq, const Modulus& n);
/// Same DP on residues already reduced mod N.
[[nodiscard]] CountReport count_by_residue(std::span<const std::int64_t> residues, const Modulus& n);

[[nodiscard]] BigInt count_zero(const IntSequence& seq, const Modulus& n,
                                EmptySubset empty = EmptySubset::include);

/// Maximum length accepted by brute_force_count.
inline constexpr std::size_t brute_force_limit = 25;

/// Explicit enumeration of all 2^L subsets. Throws SizeError if L > 25.
[[nodiscard]] BigInt brute_force_count(const IntSequence& seq, const Modulus& n,
                                       EmptySubset empty = EmptySubset::include);

/// The full complex value of the roots-of-unity filter.
[[nodiscard]] std::complex<double> character_sum(const IntSequence& seq, const Modulus& n);
/// Real part of character_sum. Exact to double precision only for L <= 64.
[[nodiscard]] double character_sum_estimate(const IntSequence& seq, const Modulus& n);

[[nodiscard]] CosineTermVector cosine_terms(const IntSequence& seq, const Modulus& n);

/// N * count >= 2^L, in exact integer arithmetic.
[[nodiscard]] bool meets_threshold(const BigInt& count, std::size_t length, const Modulus& n);

}  // namespace equisub
