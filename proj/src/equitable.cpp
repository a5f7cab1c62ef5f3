#include "equisub/equitable.hpp"

#include <algorithm>
#include <string>

#include "equisub/counting.hpp"

namespace equisub {

PropertyReport verify_equitable(const IntSequence& seq, const OddModulus& n) {
    PropertyReport report;
    report.length = seq.size();
    for (const auto& t : seq) {
        ++report.class_multiplicities[pm_class(t.value, n).rep];
    }
    report.even_classes_ok = std::all_of(
        report.class_multiplicities.begin(), report.class_multiplicities.end(),
        [](const auto& kv) { return kv.first == 0 || kv.second % 2 == 0; });
    report.length_ok = seq.size() > static_cast<std::size_t>(n.value());
    report.sum_mod_2n = Residue{mod_floor(seq.sum(), n.doubled()), n.doubled()};
    report.zero_sum_mod_2n_ok = report.sum_mod_2n.value == 0;
    return report;
}

EquitableCertificate extract_equitable(const IntSequence& seq, const OddModulus& n) {
    const auto needed = static_cast<std::size_t>(4 * n.value());
    if (seq.size() < needed) {
        throw LengthError("extraction needs at least 4N = " + std::to_string(needed) +
                          " terms, got " + std::to_string(seq.size()));
    }

    PairedSequence pairing = build_pairing(seq, n);
    // 2T + leftovers = M >= 4N and leftovers <= N + 1 give T >= (3N - 1) / 2 >= N.
    ZeroSumCertificate c_union = extract_zero_union(pairing.c_sequence(), n);

    std::vector<std::size_t> selected;
    selected.reserve(2 * c_union.indices.size());
    for (std::size_t pos : c_union.indices) {
        const Pair& p = pairing.pairs[pos - 1];
        selected.push_back(p.first);
        selected.push_back(p.second);
    }
    std::sort(selected.begin(), selected.end());

    IntSequence chosen = seq.select(selected);
    PropertyReport report = verify_equitable(chosen, n);
    if (!report.all_ok()) {
        throw InternalError("extracted subsequence violates an equitability property");
    }
    if (chosen.sum() != c_union.sum) {
        throw InternalError("unfolded subsequence does not reproduce the c-union sum");
    }

    BigInt zero_count = count_zero(chosen, n, EmptySubset::include);
    const bool threshold = meets_threshold(zero_count, chosen.size(), n);
    if (!threshold) {
        throw InternalError("extracted subsequence misses the 2^L/N zero-sum threshold");
    }

    return EquitableCertificate{std::move(selected), std::move(chosen), std::move(report),
                                std::move(zero_count), threshold, std::move(pairing),
                                std::move(c_union)};
}

}  // namespace equisub
