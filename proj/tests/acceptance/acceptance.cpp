// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "equisub/cli.hpp"
#include "equisub/conjecture.hpp"
#include "equisub/counting.hpp"
#include "equisub/equitable.hpp"
#include "equisub/pairing.hpp"
#include "equisub/zerosum.hpp"
#include "support/oracle.hpp"

using namespace equisub;
using namespace equisub::testing;

namespace {

struct Failures {
    std::vector<std::string> messages;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && messages.size() < 10) messages.push_back(what);
        if (!ok) ++failed;
    }
    std::size_t failed = 0;
};

struct Criterion {
    std::string name;
    double time_limit_s;
    std::function<void(Failures&)> body;
};

IntSequence ones(std::size_t k) { return IntSequence(std::vector<BigInt>(k, 1)); }

std::string show(const std::vector<std::int64_t>& v) {
    std::ostringstream s;
    s << '[';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    s << ']';
    return s.str();
}

bool exact_threshold(const BigInt& count, std::size_t length, std::int64_t n) {
    BigInt scaled = count * static_cast<long>(n);
    return scaled >= pow2(length);
}

// Certificate invariants, rechecked from the raw sequence.
void check_certificate(Failures& f, const IntSequence& seq, std::int64_t n, const std::string& tag) {
    EquitableCertificate cert = [&] {
        try {
            return extract_equitable(seq, OddModulus(n));
        } catch (const Error& e) {
            f.expect(false, tag + ": extraction threw: " + e.what());
            throw;
        }
    }();
    const IntSequence chosen = seq.select(cert.selected_indices);
    const PropertyReport report = verify_equitable(chosen, OddModulus(n));
    const BigInt count = count_zero(chosen, Modulus(n));
    f.expect(cert.length() >= static_cast<std::size_t>(n) + 1, tag + ": L <= N");
    f.expect(report.even_classes_ok, tag + ": property a");
    f.expect(report.length_ok, tag + ": property b");
    f.expect(report.zero_sum_mod_2n_ok, tag + ": property c");
    f.expect(count == cert.zero_count, tag + ": zero_count mismatch");
    f.expect(exact_threshold(count, chosen.size(), n), tag + ": threshold");
    f.expect(cert.threshold_met, tag + ": threshold flag");
    f.expect(cert.length() == 2 * cert.c_union.indices.size(), tag + ": L != 2|c_union|");
    if (chosen.size() <= brute_force_limit) {
        f.expect(brute_force_count(chosen, Modulus(n)) == count, tag + ": brute force disagrees");
    }
}

void paper_values(Failures& f) {
    f.expect(count_zero(ones(9), Modulus(3), EmptySubset::exclude) == 169, "nine ones: 169");
    // 2 C(3N, N) + 1 at N = 3
    f.expect(BigInt(2 * 84 + 1) == 169, "2 C(9,3) + 1");
    f.expect(count_zero(ones(12), Modulus(3)) == 1366, "twelve ones: 1366");
    f.expect(meets_threshold(1366, 12, Modulus(3)), "1366 meets 2^12/3");
    const BigInt with_empty = count_zero(ones(6), Modulus(3), EmptySubset::include);
    const BigInt nonempty = count_zero(ones(6), Modulus(3), EmptySubset::exclude);
    f.expect(with_empty == 22, "six ones with empty: 22");
    f.expect(nonempty == 21, "six ones nonempty: 21 = C(6,3) + 1");
    f.expect(meets_threshold(with_empty, 6, Modulus(3)), "22 meets 2^6/3");
    f.expect(!meets_threshold(nonempty, 6, Modulus(3)), "21 misses 2^6/3");
}

void theorem_random(Failures& f) {
    std::mt19937_64 rng(20260101);
    for (std::int64_t n : {3, 5, 7, 9, 11}) {
        for (std::size_t length : {static_cast<std::size_t>(4 * n), static_cast<std::size_t>(4 * n + 7)}) {
            for (int k = 0; k < 200; ++k) {
                const auto v = random_values(rng, length, -10 * n, 10 * n);
                try {
                    check_certificate(f, IntSequence::from_ints(v), n, "N=" + std::to_string(n) + " " + show(v));
                } catch (const Error&) {
                }
            }
        }
    }
}

void theorem_exhaustive(Failures& f) {
    const std::int64_t n = 3;
    std::size_t instances = 0;
    MultisetEnumerator gen(Modulus(2 * n), static_cast<std::size_t>(4 * n));
    while (auto r = gen.next()) {
        ++instances;
        try {
            check_certificate(f, IntSequence::from_ints(*r), n, show(*r));
        } catch (const Error&) {
        }
    }
    f.expect(instances == 6188, "instance count " + std::to_string(instances) + " != C(17,5)");
}

void oracle_equivalence(Failures& f) {
    for (std::int64_t n : {2, 3}) {
        for (std::size_t length = 0; length <= 10; ++length) {
            std::vector<std::int64_t> v(length, 0);
            while (true) {
                const IntSequence seq = IntSequence::from_ints(v);
                f.expect(count_zero(seq, Modulus(n)) == brute_force_count(seq, Modulus(n)),
                         "N=" + std::to_string(n) + " " + show(v));
                std::size_t i = 0;
                while (i < length && ++v[i] == n) v[i++] = 0;
                if (i == length) break;
            }
        }
    }
    std::mt19937_64 rng(4);
    for (int k = 0; k < 1000; ++k) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 10);
        const auto v = random_values(rng, rng() % 21, -1'000'000'000, 1'000'000'000);
        const IntSequence seq = IntSequence::from_ints(v);
        for (EmptySubset e : {EmptySubset::include, EmptySubset::exclude}) {
            f.expect(count_zero(seq, Modulus(n), e) == brute_force_count(seq, Modulus(n), e),
                     "random N=" + std::to_string(n) + " " + show(v));
        }
    }
}

void character_identity(Failures& f) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; ++k) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 14);
        const auto v = random_values(rng, rng() % 41, -100'000, 100'000);
        const IntSequence seq = IntSequence::from_ints(v);
        const auto z = character_sum(seq, Modulus(n));
        const double exact = count_zero(seq, Modulus(n)).get_d();
        f.expect(std::abs(z.real() - exact) <= 1e-6 * exact, "estimate N=" + std::to_string(n) + " " + show(v));
        f.expect(std::abs(z.imag()) < 1e-6 * std::max(1.0, z.real()), "imaginary part " + show(v));
    }

    // Equitable inputs: extraction outputs plus hand-built pair sequences.
    std::vector<std::pair<IntSequence, std::int64_t>> passing;
    for (int k = 0; k < 300; ++k) {
        const std::int64_t n = 3 + 2 * static_cast<std::int64_t>(rng() % 5);
        const auto v = random_values(rng, static_cast<std::size_t>(4 * n) + rng() % 8, -10 * n, 10 * n);
        passing.emplace_back(extract_equitable(IntSequence::from_ints(v), OddModulus(n)).selected, n);
    }
    for (int k = 0; k < 300; ++k) {
        const std::int64_t n = 3 + 2 * static_cast<std::int64_t>(rng() % 5);
        const auto v = random_values(rng, 10 + rng() % 20, -1000, 1000);
        if (verify_equitable(IntSequence::from_ints(v), OddModulus(n)).all_ok()) {
            passing.emplace_back(IntSequence::from_ints(v), n);
        }
    }
    std::size_t verified = 0;
    for (const auto& [seq, n] : passing) {
        if (!verify_equitable(seq, OddModulus(n)).all_ok()) continue;
        ++verified;
        const auto ct = cosine_terms(seq, Modulus(n));
        const double exact = count_zero(seq, Modulus(n)).get_d();
        f.expect(std::abs(ct.reconstructed_count() - exact) <= 1e-6 * exact, "cosine identity");
        for (double t : ct.terms) f.expect(t >= -1e-9, "negative cosine term");
    }
    f.expect(verified >= 300, "too few equitable sequences checked");
}

void lemma_corollary(Failures& f) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 1000; ++k) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 20);
        const std::size_t t = static_cast<std::size_t>(n) + rng() % 40;
        const auto v = random_values(rng, t, -1'000'000, 1'000'000);
        const IntSequence seq = IntSequence::from_ints(v);
        const std::string tag = "N=" + std::to_string(n) + " " + show(v);

        const auto block = find_zero_subsum(seq, Modulus(n));
        bool contiguous = !block.indices.empty();
        for (std::size_t i = 1; i < block.indices.size(); ++i) {
            contiguous = contiguous && block.indices[i] == block.indices[i - 1] + 1;
        }
        f.expect(contiguous, tag + ": block not contiguous");
        f.expect(seq.select(block.indices).sum() == block.sum, tag + ": block sum");
        f.expect(mod_floor(block.sum, n) == 0, tag + ": block not zero-sum");

        const auto all = extract_zero_union(seq, Modulus(n));
        f.expect(all.indices.size() >= t - static_cast<std::size_t>(n) + 1, tag + ": union too small");
        f.expect(seq.select(all.indices).sum() == all.sum, tag + ": union sum");
        f.expect(mod_floor(all.sum, n) == 0, tag + ": union not zero-sum");
    }
}

void pairing_invariants(Failures& f) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 1000; ++k) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 15);
        const std::size_t m = rng() % 80;
        const auto v = random_values(rng, m, -50 * n, 50 * n);
        const IntSequence seq = IntSequence::from_ints(v);
        const auto p = build_pairing(seq, Modulus(n));
        const std::string tag = "N=" + std::to_string(n) + " " + show(v);

        std::vector<int> hit(m + 1, 0);
        for (const auto& pair : p.pairs) {
            ++hit[pair.first];
            ++hit[pair.second];
            f.expect(mod_floor(pair.sum, 2) == 0, tag + ": odd c");
            f.expect(pair.sum == seq.at_index(pair.first) + seq.at_index(pair.second), tag + ": c mismatch");
        }
        for (auto i : p.leftovers) ++hit[i];
        bool cover = true;
        for (std::size_t i = 1; i <= m; ++i) cover = cover && hit[i] == 1;
        f.expect(cover, tag + ": indices not a disjoint cover");
        f.expect(p.leftovers.size() <= static_cast<std::size_t>(n) + 1, tag + ": too many leftovers");
        const std::int64_t lower = (static_cast<std::int64_t>(m) - (n + 1) + 1) / 2;  // ceil((M-(N+1))/2)
        f.expect(static_cast<std::int64_t>(p.size()) >= lower, tag + ": T below bound");
    }
}

void conjecture_exhaustive(Failures& f) {
    const std::vector<std::size_t> expected{5, 28, 165, 1001};
    for (std::int64_t n = 2; n <= 5; ++n) {
        SearchOptions opts;
        opts.threads = 4;
        const auto report = search_conjecture(Modulus(n), opts);
        const auto counterexamples = report.counterexamples();
        f.expect(report.instances_checked() == expected[static_cast<std::size_t>(n - 2)],
                 "N=" + std::to_string(n) + " instance count");
        f.expect(BigInt(static_cast<unsigned long>(report.instances_checked())) ==
                     multiset_count(Modulus(n), static_cast<std::size_t>(2 * n)),
                 "N=" + std::to_string(n) + " count formula");
        for (const auto& c : counterexamples) {
            f.expect(false, "COUNTEREXAMPLE N=" + std::to_string(n) + " " + show(c.residues));
        }
        f.expect(cli::search_exit_code(report) == (counterexamples.empty() ? 0 : 1), "exit code");
        for (const auto& r : report.results) {
            if (!r.witness) continue;
            const IntSequence sub = r.instance.sequence().select(r.witness->indices);
            f.expect(r.witness->length() >= static_cast<std::size_t>(n), "witness shorter than N");
            f.expect(brute_force_count(sub, Modulus(n)) == r.witness->zero_count,
                     "witness count " + show(r.instance.residues));
            f.expect(exact_threshold(r.witness->zero_count, r.witness->length(), n), "witness threshold");
        }
    }
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "equisub");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str()};
}

void cli_round_trip(Failures& f) {
    std::mt19937_64 rng(9);
    for (std::int64_t n : {3, 5, 7}) {
        const auto v = random_values(rng, static_cast<std::size_t>(4 * n + 3), -10 * n, 10 * n);
        std::string input;
        for (auto x : v) input += std::to_string(x) + "\n";
        const auto first = cli_run({"extract", "-n", std::to_string(n)}, input);
        const auto again = cli_run({"extract", "-n", std::to_string(n)}, input);
        f.expect(first.code == 0, "extract exit 0");
        f.expect(first.out == again.out, "extract byte-identical");
        const auto doc = nlohmann::json::parse(first.out);
        std::string terms;
        for (const auto& t : doc["selected_terms"]) terms += t.get<std::string>() + " ";
        f.expect(cli_run({"verify", "-n", std::to_string(n)}, terms).code == 0, "round trip verify exit 0");
    }
    const std::string twelve = "1 1 1 1 1 1 1 1 1 1 1 1";
    f.expect(cli_run({"extract", "-n", "4"}, twelve).code == 2, "extract even N exit 2");
    f.expect(cli_run({"extract", "-n", "3"}, "1 1").code == 2, "extract short exit 2");
    f.expect(cli_run({"count", "-n", "3"}, twelve).code == 0, "count exit 0");
    f.expect(cli_run({"count", "-n", "3"}, "1 z").code == 2, "count parse error exit 2");
    f.expect(cli_run({"count", "-n", "3"}, twelve).out == cli_run({"count", "-n", "3"}, twelve).out,
             "count byte-identical");
    f.expect(cli_run({"verify", "-n", "3"}, twelve).code == 0, "verify exit 0");
    f.expect(cli_run({"verify", "-n", "3"}, "1 1").code == 1, "verify exit 1");
    f.expect(cli_run({"verify", "-n", "2"}, "1 1").code == 2, "verify exit 2");
    const auto s1 = cli_run({"search", "-n", "9", "--mode", "random", "--budget", "100", "--seed", "42"});
    const auto s2 = cli_run({"search", "-n", "9", "--mode", "random", "--budget", "100", "--seed", "42"});
    f.expect(s1.code == 0, "search exit 0");
    f.expect(s1.out == s2.out, "search byte-identical");
    f.expect(cli_run({"search", "-n", "8"}).code == 2, "search exhaustive N > 6 exit 2");
    f.expect(cli_run({"search", "--mode", "random"}).code == 2, "search missing modulus exit 2");

    // Exhaustive N = 6 contains counterexamples (0,0,0 and nine 1s or nine 5s).
    const auto s6 = cli_run({"search", "-n", "6", "--threads", "4"});
    f.expect(s6.code == 1, "search counterexample exit 1");
    f.expect(nlohmann::json::parse(s6.out)["counterexamples"].size() == 2, "search counterexample data");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1 paper values on all-ones sequences", 1.0, paper_values},
        {"AC2 extraction theorem, randomized sweep", 60.0, theorem_random},
        {"AC3 extraction theorem, exhaustive N=3 multisets mod 6", 600.0, theorem_exhaustive},
        {"AC4 DP count equals brute force", 60.0, oracle_equivalence},
        {"AC5 character-sum and cosine identities", 30.0, character_identity},
        {"AC6 partial-sum zero block and iterated union", 10.0, lemma_corollary},
        {"AC7 pairing invariants", 10.0, pairing_invariants},
        {"AC8 conjecture exhaustive search N=2..5", 300.0, conjecture_exhaustive},
        {"AC9 CLI round trip and exit codes", 5.0, cli_round_trip},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Failures f;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(f);
        } catch (const std::exception& e) {
            f.expect(false, std::string("uncaught exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < c.time_limit_s;
        const bool ok = f.failed == 0 && in_time;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << "  (" << f.checks << " checks, "
                  << f.failed << " failed, " << elapsed << "s / limit " << c.time_limit_s << "s)\n";
        for (const auto& m : f.messages) std::cout << "    " << m << '\n';
        if (!in_time) std::cout << "    runtime limit exceeded\n";
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}
