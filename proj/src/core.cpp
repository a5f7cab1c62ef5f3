#include "equisub/core.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace equisub {

Modulus::Modulus(std::int64_t n) : n_(n) {
    if (n < 2) {
        throw ModulusError("modulus must be >= 2, got " + std::to_string(n));
    }
    if (n > max_value) {
        throw ModulusError("modulus " + std::to_string(n) + " exceeds the supported maximum " +
                           std::to_string(max_value));
    }
}

namespace {

Modulus checked_odd(std::int64_t n) {
    if (n < 3 || n % 2 == 0) {
        throw ParityError("modulus must be odd and >= 3, got " + std::to_string(n));
    }
    return Modulus(n);
}

}  // namespace

OddModulus::OddModulus(std::int64_t n) : m_(checked_odd(n)) {}

IntSequence::IntSequence(std::vector<BigInt> values) {
    terms_.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        terms_.push_back(Term{i + 1, std::move(values[i])});
    }
}

IntSequence::IntSequence(std::initializer_list<long> values) {
    terms_.reserve(values.size());
    std::size_t i = 0;
    for (long v : values) {
        terms_.push_back(Term{++i, BigInt(v)});
    }
}

IntSequence IntSequence::from_ints(std::span<const std::int64_t> values) {
    std::vector<BigInt> big;
    big.reserve(values.size());
    for (std::int64_t v : values) {
        big.emplace_back(static_cast<long>(v));
    }
    return IntSequence(std::move(big));
}

IntSequence IntSequence::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].index == 0 || (i > 0 && terms[i].index <= terms[i - 1].index)) {
            throw IndexError("term indices must be 1-based and strictly increasing");
        }
    }
    IntSequence seq;
    seq.terms_ = std::move(terms);
    return seq;
}

std::vector<BigInt> IntSequence::values() const {
    std::vector<BigInt> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.value);
    return out;
}

std::vector<std::size_t> IntSequence::indices() const {
    std::vector<std::size_t> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.index);
    return out;
}

BigInt IntSequence::sum() const {
    BigInt s = 0;
    for (const auto& t : terms_) s += t.value;
    return s;
}

const BigInt& IntSequence::at_index(std::size_t index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::size_t i) { return t.index < i; });
    if (it == terms_.end() || it->index != index) {
        throw IndexError("index " + std::to_string(index) + " is not part of the sequence");
    }
    return it->value;
}

IntSequence IntSequence::select(std::span<const std::size_t> original_indices) const {
    std::unordered_set<std::size_t> wanted(original_indices.begin(), original_indices.end());
    IntSequence out;
    for (const auto& t : terms_) {
        if (wanted.erase(t.index) != 0) out.terms_.push_back(t);
    }
    if (!wanted.empty()) {
        throw IndexError("index " + std::to_string(*wanted.begin()) + " is not part of the sequence");
    }
    return out;
}

IntSequence IntSequence::without(std::span<const std::size_t> original_indices) const {
    std::unordered_set<std::size_t> dropped(original_indices.begin(), original_indices.end());
    IntSequence out;
    for (const auto& t : terms_) {
        if (!dropped.contains(t.index)) out.terms_.push_back(t);
    }
    return out;
}

std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
    // mpz_fdiv_ui rounds toward -infinity, so the remainder is already in [0, m).
    return static_cast<std::int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

Residue normalize_residue(const BigInt& a, const Modulus& m) {
    return Residue{mod_floor(a, m.value()), m.value()};
}

Residue normalize_residue(std::int64_t a, const Modulus& m) {
    std::int64_t r = a % m.value();
    if (r < 0) r += m.value();
    return Residue{r, m.value()};
}

PlusMinusClass pm_class_of_residue(std::int64_t r, std::int64_t twice_n) noexcept {
    return PlusMinusClass{std::min(r, twice_n - r)};
}

PlusMinusClass pm_class(const BigInt& a, const Modulus& n) {
    return pm_class_of_residue(mod_floor(a, n.doubled()), n.doubled());
}

PlusMinusClass pm_class(std::int64_t a, const Modulus& n) {
    std::int64_t r = a % n.doubled();
    if (r < 0) r += n.doubled();
    return pm_class_of_residue(r, n.doubled());
}

std::vector<std::int64_t> residues(const IntSequence& seq, std::int64_t m) {
    std::vector<std::int64_t> out;
    out.reserve(seq.size());
    for (const auto& t : seq) out.push_back(mod_floor(t.value, m));
    return out;
}

}  // namespace equisub
