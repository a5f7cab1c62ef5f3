#include "equisub/pairing.hpp"

#include <algorithm>
#include <map>

namespace equisub {

IntSequence PairedSequence::c_sequence() const {
    std::vector<BigInt> cs;
    cs.reserve(pairs.size());
    for (const auto& p : pairs) cs.push_back(p.sum);
    return IntSequence(std::move(cs));
}

PairedSequence build_pairing(const IntSequence& seq, const Modulus& n) {
    std::map<std::int64_t, std::vector<const Term*>> groups;
    for (const auto& t : seq) {
        groups[pm_class(t.value, n).rep].push_back(&t);
    }

    PairedSequence out{{}, {}, 0, n};
    std::vector<Pair> zero_pairs;
    for (const auto& [rep, members] : groups) {
        auto& dest = rep == 0 ? zero_pairs : out.pairs;
        std::size_t k = 0;
        for (; k + 1 < members.size(); k += 2) {
            dest.push_back(Pair{members[k]->index, members[k + 1]->index,
                                members[k]->value + members[k + 1]->value});
        }
        if (k < members.size()) out.leftovers.push_back(members[k]->index);
    }

    auto by_first = [](const Pair& a, const Pair& b) { return a.first < b.first; };
    std::sort(out.pairs.begin(), out.pairs.end(), by_first);
    std::sort(zero_pairs.begin(), zero_pairs.end(), by_first);
    std::sort(out.leftovers.begin(), out.leftovers.end());

    out.zero_class_start = out.pairs.size();
    for (auto& p : zero_pairs) out.pairs.push_back(std::move(p));

    if (out.leftovers.size() > static_cast<std::size_t>(n.value()) + 1) {
        throw InternalError("more than N+1 unpaired terms");
    }
    return out;
}

}  // namespace equisub
