#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "equisub/core.hpp"
#include "equisub/pairing.hpp"
#include "equisub/zerosum.hpp"

namespace equisub {

/// Verdicts on the three structural properties that force a subsequence to be
/// equitable when N is odd:
///   a) every +/- class n != 0 (mod 2N) has even multiplicity,
///   b) the length exceeds N,
///   c) the sum is 0 (mod 2N).
struct PropertyReport {
    bool even_classes_ok = false;
    bool length_ok = false;
    bool zero_sum_mod_2n_ok = false;
    std::size_t length = 0;
    std::map<std::int64_t, std::size_t> class_multiplicities;  // keyed by class representative
    Residue sum_mod_2n;

    [[nodiscard]] bool all_ok() const noexcept {
        return even_classes_ok && length_ok && zero_sum_mod_2n_ok;
    }
};

struct EquitableCertificate {
    std::vector<std::size_t> selected_indices;  // ascending original indices
    IntSequence selected;                       // the equitable subsequence itself
    PropertyReport report;
    BigInt zero_count;  // empty subset included
    bool threshold_met = false;
    PairedSequence pairing_trace;
    ZeroSumCertificate c_union;  // indices are pair positions (1-based)

    [[nodiscard]] std::size_t length() const noexcept { return selected_indices.size(); }
};

[[nodiscard]] PropertyReport verify_equitable(const IntSequence& seq, const OddModulus& n);

/// Pairs terms, extracts a zero-sum union of the c-sequence mod N and unfolds
/// it back to the original terms. Requires at least 4N terms (LengthError).
/// Any failed check on the result raises InternalError.
[[nodiscard]] EquitableCertificate extract_equitable(const IntSequence& seq, const OddModulus& n);

}  // namespace equisub
