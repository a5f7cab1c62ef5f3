#include "equisub/counting.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace equisub {

CountReport count_by_residue(std::span<const std::int64_t> residues, const Modulus& n) {
    const auto mod = static_cast<std::size_t>(n.value());
    std::vector<BigInt> counts(mod, 0);
    counts[0] = 1;
    std::vector<BigInt> next(mod);
    for (std::int64_t r : residues) {
        const auto shift = static_cast<std::size_t>(r);
        if (shift == 0) {
            for (auto& c : counts) c *= 2;
            continue;
        }
        next = counts;
        for (std::size_t s = 0; s < mod; ++s) {
            std::size_t target = s + shift;
            if (target >= mod) target -= mod;
            next[target] += counts[s];
        }
        counts.swap(next);
    }
    return CountReport{n, std::move(counts), residues.size()};
}

CountReport count_by_residue(const IntSequence& seq, const Modulus& n) {
    const auto rs = residues(seq, n.value());
    return count_by_residue(std::span<const std::int64_t>(rs), n);
}

BigInt count_zero(const IntSequence& seq, const Modulus& n, EmptySubset empty) {
    BigInt zero = count_by_residue(seq, n).counts[0];
    if (empty == EmptySubset::exclude) zero -= 1;
    return zero;
}

BigInt brute_force_count(const IntSequence& seq, const Modulus& n, EmptySubset empty) {
    if (seq.size() > brute_force_limit) {
        throw SizeError("brute force counting is limited to " + std::to_string(brute_force_limit) +
                        " terms, got " + std::to_string(seq.size()));
    }
    const std::int64_t mod = n.value();
    const auto rs = residues(seq, mod);
    const std::uint64_t total = std::uint64_t{1} << seq.size();

    // Gray-code walk: each step toggles exactly one term in or out.
    std::uint64_t hits = 1;  // the empty subset
    std::int64_t sum = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        const std::uint64_t next_gray = k ^ (k >> 1);
        const auto bit = static_cast<std::size_t>(std::countr_zero(next_gray ^ gray));
        if (next_gray & (std::uint64_t{1} << bit)) {
            sum += rs[bit];
            if (sum >= mod) sum -= mod;
        } else {
            sum -= rs[bit];
            if (sum < 0) sum += mod;
        }
        gray = next_gray;
        if (sum == 0) ++hits;
    }
    if (empty == EmptySubset::exclude) --hits;
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(hits), 0, 0, &hits);
    return out;
}

std::complex<double> character_sum(const IntSequence& seq, const Modulus& n) {
    const std::int64_t mod = n.value();
    const auto rs = residues(seq, mod);
    std::complex<double> total = 0.0;
    for (std::int64_t b = 0; b < mod; ++b) {
        std::complex<double> product = 1.0;
        for (std::int64_t r : rs) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((b * r) % mod) /
                                 static_cast<double>(mod);
            product *= std::complex<double>(1.0 + std::cos(angle), std::sin(angle));
        }
        total += product;
    }
    return total / static_cast<double>(mod);
}

double character_sum_estimate(const IntSequence& seq, const Modulus& n) {
    return character_sum(seq, n).real();
}

CosineTermVector cosine_terms(const IntSequence& seq, const Modulus& n) {
    const std::int64_t mod = n.value();
    const std::int64_t twice = n.doubled();
    const auto rs = residues(seq, twice);

    CosineTermVector out{n, seq.size(), {}, {}};
    out.terms.reserve(static_cast<std::size_t>(mod));
    out.multiplicities.reserve(static_cast<std::size_t>(mod));
    for (std::int64_t b = 0; b < mod; ++b) {
        std::vector<std::size_t> mult(static_cast<std::size_t>(mod) + 1, 0);
        double product = 1.0;
        for (std::int64_t r : rs) {
            const std::int64_t x = (b * r) % twice;
            ++mult[static_cast<std::size_t>(pm_class_of_residue(x, twice).rep)];
            product *= std::cos(std::numbers::pi * static_cast<double>(x) / static_cast<double>(mod));
        }
        out.terms.push_back(product);
        out.multiplicities.push_back(std::move(mult));
    }
    return out;
}

bool CosineTermVector::all_classes_even(std::size_t b) const {
    const auto& mult = multiplicities.at(b);
    for (std::size_t cls = 1; cls < mult.size(); ++cls) {
        if (mult[cls] % 2 != 0) return false;
    }
    return true;
}

bool CosineTermVector::structurally_nonnegative(std::size_t b) const {
    const auto& mult = multiplicities.at(b);
    // cos(pi n / N) < 0 exactly for N/2 < n <= N; the sign of the regrouped
    // product is the parity of the total multiplicity over those classes.
    const auto mod = static_cast<std::size_t>(modulus.value());
    std::size_t negative = 0;
    for (std::size_t cls = 1; cls <= mod; ++cls) {
        if (2 * cls == mod && mult[cls] > 0) return true;  // a zero factor
        if (2 * cls > mod) negative += mult[cls];
    }
    return negative % 2 == 0;
}

double CosineTermVector::reconstructed_count() const {
    double s = 0.0;
    for (double t : terms) s += t;
    return std::ldexp(s, static_cast<int>(length)) / static_cast<double>(modulus.value());
}

bool meets_threshold(const BigInt& count, std::size_t length, const Modulus& n) {
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(length));
    return BigInt(count * static_cast<long>(n.value())) >= bound;
}

}  // namespace equisub
