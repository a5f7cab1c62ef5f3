#include "equisub/zerosum.hpp"

#include <algorithm>
#include <string>

namespace equisub {

namespace {

void require_length(const IntSequence& seq, const Modulus& n) {
    if (seq.size() < static_cast<std::size_t>(n.value())) {
        throw LengthError("sequence length " + std::to_string(seq.size()) +
                          " is smaller than the modulus " + std::to_string(n.value()));
    }
}

}  // namespace

ZeroSumCertificate find_zero_subsum(const IntSequence& seq, const Modulus& n) {
    require_length(seq, n);
    const std::int64_t mod = n.value();

    // first_seen[r] = smallest k with s_k == r, or -1.
    std::vector<std::int64_t> first_seen(static_cast<std::size_t>(mod), -1);
    first_seen[0] = 0;
    std::int64_t partial = 0;
    for (std::size_t j = 1; j <= seq.size(); ++j) {
        partial = (partial + mod_floor(seq[j - 1].value, mod)) % mod;
        auto& seen = first_seen[static_cast<std::size_t>(partial)];
        if (seen >= 0) {
            ZeroSumCertificate cert{{}, n, 0};
            for (std::size_t p = static_cast<std::size_t>(seen); p < j; ++p) {
                cert.indices.push_back(seq[p].index);
                cert.sum += seq[p].value;
            }
            return cert;
        }
        seen = static_cast<std::int64_t>(j);
    }
    // N + 1 partial sums s_0..s_N cannot all be distinct mod N.
    throw InternalError("pigeonhole failed to find a repeated partial sum");
}

ZeroSumCertificate extract_zero_union(const IntSequence& seq, const Modulus& n) {
    require_length(seq, n);
    ZeroSumCertificate result{{}, n, 0};
    IntSequence residual = seq;
    while (residual.size() >= static_cast<std::size_t>(n.value())) {
        ZeroSumCertificate block = find_zero_subsum(residual, n);
        result.indices.insert(result.indices.end(), block.indices.begin(), block.indices.end());
        result.sum += block.sum;
        residual = residual.without(block.indices);
    }
    std::sort(result.indices.begin(), result.indices.end());
    return result;
}

}  // namespace equisub
