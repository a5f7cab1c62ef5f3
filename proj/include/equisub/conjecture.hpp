#pragma once

// Counterexample search for the length-2N conjecture: every integer sequence
// of length 2N (N >= 2) should contain a subsequence of length L >= N with at
// least 2^L / N zero-sum sub-subsequences mod N.
//
// Zero-sum counts depend only on terms mod N and are invariant under
// reordering, so the exhaustive mode walks residue multisets instead of all
// N^{2N} sequences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "equisub/core.hpp"

namespace equisub {

enum class SearchMode { exhaustive, random };

[[nodiscard]] std::string_view to_string(SearchMode mode) noexcept;

struct ConjectureInstance {
    Modulus modulus;
    std::vector<std::int64_t> residues;  // each in [0, N)

    [[nodiscard]] IntSequence sequence() const;
};

struct Witness {
    std::vector<std::size_t> indices;  // 1-based, ascending
    BigInt zero_count;                 // empty subset included
    std::optional<bool> brute_force_agrees;  // set when the oracle was run

    [[nodiscard]] std::size_t length() const noexcept { return indices.size(); }
};

struct CheckedInstance {
    ConjectureInstance instance;
    std::optional<Witness> witness;
};

struct SearchOptions {
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t budget = 0;  // random mode only
    std::uint64_t seed = 0;    // random mode only
    unsigned threads = 1;
    bool reverify = true;      // brute-force check of witnesses with L <= 25
};

struct ConjectureReport {
    Modulus modulus;
    SearchOptions options;
    std::size_t sequence_length = 0;  // always 2N
    std::vector<CheckedInstance> results;  // in instance order

    [[nodiscard]] std::size_t instances_checked() const noexcept { return results.size(); }
    [[nodiscard]] std::vector<ConjectureInstance> counterexamples() const;
};

/// Nondecreasing residue lists of a fixed length over [0, N), in lexicographic order.
class MultisetEnumerator {
public:
    MultisetEnumerator(const Modulus& n, std::size_t length);

    /// The next multiset, or nullopt once all C(length + N - 1, N - 1) were produced.
    std::optional<std::vector<std::int64_t>> next();

private:
    std::int64_t top_;
    std::vector<std::int64_t> current_;
    bool started_ = false;
    bool done_ = false;
};

[[nodiscard]] std::vector<ConjectureInstance> enumerate_multisets(const Modulus& n, std::size_t length);

/// C(length + N - 1, N - 1).
[[nodiscard]] BigInt multiset_count(const Modulus& n, std::size_t length);

inline constexpr std::size_t witness_scan_limit = 30;
inline constexpr std::int64_t exhaustive_modulus_limit = 6;

/// Scans subsets of size >= N, largest first and lexicographic within a size,
/// and returns the first S with N * zero_count(S) >= 2^|S|. Throws SizeError
/// for sequences longer than 30.
[[nodiscard]] std::optional<Witness> find_witness(const IntSequence& seq, const Modulus& n);

/// Exhaustive mode throws ScaleError for N > 6. Random mode samples `budget`
/// uniform residue sequences of length 2N from a seeded mt19937_64.
[[nodiscard]] ConjectureReport search_conjecture(const Modulus& n, const SearchOptions& options);

}  // namespace equisub
