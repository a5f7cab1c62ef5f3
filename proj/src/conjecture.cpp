#include "equisub/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "equisub/counting.hpp"

namespace equisub {

std::string_view to_string(SearchMode mode) noexcept {
    return mode == SearchMode::exhaustive ? "exhaustive" : "random";
}

IntSequence ConjectureInstance::sequence() const {
    return IntSequence::from_ints(residues);
}

std::vector<ConjectureInstance> ConjectureReport::counterexamples() const {
    std::vector<ConjectureInstance> out;
    for (const auto& r : results) {
        if (!r.witness) out.push_back(r.instance);
    }
    return out;
}

MultisetEnumerator::MultisetEnumerator(const Modulus& n, std::size_t length)
    : top_(n.value() - 1), current_(length, 0) {}

std::optional<std::vector<std::int64_t>> MultisetEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return current_;
    }
    auto it = std::find_if(current_.rbegin(), current_.rend(),
                           [this](std::int64_t v) { return v < top_; });
    if (it == current_.rend()) {
        done_ = true;
        return std::nullopt;
    }
    const std::int64_t raised = *it + 1;
    std::fill(current_.rbegin(), std::next(it), raised);
    return current_;
}

std::vector<ConjectureInstance> enumerate_multisets(const Modulus& n, std::size_t length) {
    std::vector<ConjectureInstance> out;
    MultisetEnumerator gen(n, length);
    while (auto next = gen.next()) {
        out.push_back(ConjectureInstance{n, std::move(*next)});
    }
    return out;
}

BigInt multiset_count(const Modulus& n, std::size_t length) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(length + n.value() - 1),
                 static_cast<unsigned long>(n.value() - 1));
    return out;
}

std::optional<Witness> find_witness(const IntSequence& seq, const Modulus& n) {
    const std::size_t total = seq.size();
    if (total > witness_scan_limit) {
        throw SizeError("witness scan is limited to " + std::to_string(witness_scan_limit) +
                        " terms, got " + std::to_string(total));
    }
    const auto rs = residues(seq, n.value());
    const auto min_size = static_cast<std::size_t>(n.value());

    std::vector<std::size_t> pick;
    std::vector<std::int64_t> chosen;
    for (std::size_t k = total; k >= min_size && k > 0; --k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            chosen.clear();
            for (std::size_t p : pick) chosen.push_back(rs[p]);
            BigInt zero = count_by_residue(std::span<const std::int64_t>(chosen), n).counts[0];
            if (meets_threshold(zero, k, n)) {
                Witness w;
                for (std::size_t p : pick) w.indices.push_back(seq[p].index);
                w.zero_count = std::move(zero);
                return w;
            }
            // Advance to the next k-combination of [0, total).
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == total - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<ConjectureInstance> random_instances(const Modulus& n, std::size_t length,
                                                 std::uint64_t budget, std::uint64_t seed) {
    // Rejection sampling keeps the draw uniform and independent of the
    // standard library's distribution implementation.
    std::mt19937_64 rng(seed);
    const auto mod = static_cast<std::uint64_t>(n.value());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / mod * mod;
    auto draw = [&] {
        std::uint64_t x = rng();
        while (x >= limit) x = rng();
        return static_cast<std::int64_t>(x % mod);
    };

    std::vector<ConjectureInstance> out;
    out.reserve(budget);
    for (std::uint64_t k = 0; k < budget; ++k) {
        ConjectureInstance inst{n, std::vector<std::int64_t>(length)};
        for (auto& r : inst.residues) r = draw();
        out.push_back(std::move(inst));
    }
    return out;
}

CheckedInstance check_instance(ConjectureInstance inst, bool reverify) {
    const IntSequence seq = inst.sequence();
    std::optional<Witness> witness = find_witness(seq, inst.modulus);
    if (witness && reverify && witness->length() <= brute_force_limit) {
        const BigInt oracle = brute_force_count(seq.select(witness->indices), inst.modulus);
        witness->brute_force_agrees = oracle == witness->zero_count;
        if (!*witness->brute_force_agrees) {
            throw InternalError("witness zero count disagrees with brute-force enumeration");
        }
    }
    return CheckedInstance{std::move(inst), std::move(witness)};
}

}  // namespace

ConjectureReport search_conjecture(const Modulus& n, const SearchOptions& options) {
    const auto length = static_cast<std::size_t>(2 * n.value());
    std::vector<ConjectureInstance> instances;
    if (options.mode == SearchMode::exhaustive) {
        if (n.value() > exhaustive_modulus_limit) {
            throw ScaleError("exhaustive search supports N <= " +
                             std::to_string(exhaustive_modulus_limit) + ", got " +
                             std::to_string(n.value()));
        }
        instances = enumerate_multisets(n, length);
    } else {
        if (options.budget < 1) throw ScaleError("random search needs a budget of at least 1");
        if (length > witness_scan_limit) {
            throw SizeError("random search needs 2N <= " + std::to_string(witness_scan_limit));
        }
        instances = random_instances(n, length, options.budget, options.seed);
    }

    std::vector<std::optional<CheckedInstance>> slots(instances.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t k = cursor++; k < instances.size() && !failed; k = cursor++) {
            try {
                slots[k] = check_instance(std::move(instances[k]), options.reverify);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, options.threads);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    ConjectureReport report{n, options, length, {}};
    report.results.reserve(slots.size());
    for (auto& s : slots) report.results.push_back(std::move(*s));
    return report;
}

}  // namespace equisub
