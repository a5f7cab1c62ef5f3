#pragma once

// Base domain types shared by every stage of the extraction pipeline:
// moduli, integer sequences that remember their original indices, residues,
// and the +/- classes modulo 2N.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace equisub {

using BigInt = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModulusError : public Error { public: using Error::Error; };
class ParityError : public Error { public: using Error::Error; };
class LengthError : public Error { public: using Error::Error; };
class SizeError : public Error { public: using Error::Error; };
class ScaleError : public Error { public: using Error::Error; };
class IndexError : public Error { public: using Error::Error; };
class InternalError : public Error { public: using Error::Error; };

/// Modulus N >= 2. Upper bound keeps 2N and b*r (b, r < 2N) inside int64.
class Modulus {
public:
    static constexpr std::int64_t max_value = std::int64_t{1} << 30;

    explicit Modulus(std::int64_t n);

    [[nodiscard]] std::int64_t value() const noexcept { return n_; }
    [[nodiscard]] std::int64_t doubled() const noexcept { return 2 * n_; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t n_;
};

/// Odd modulus N >= 3, the setting in which the extraction theorem holds.
class OddModulus {
public:
    explicit OddModulus(std::int64_t n);

    [[nodiscard]] std::int64_t value() const noexcept { return m_.value(); }
    [[nodiscard]] std::int64_t doubled() const noexcept { return m_.doubled(); }
    [[nodiscard]] const Modulus& modulus() const noexcept { return m_; }
    operator const Modulus&() const noexcept { return m_; }

private:
    Modulus m_;
};

struct Residue {
    std::int64_t value = 0;
    std::int64_t modulus = 1;

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Canonical representative r = min(x, 2N - x) of the class {x, -x} mod 2N.
struct PlusMinusClass {
    std::int64_t rep = 0;

    friend auto operator<=>(const PlusMinusClass&, const PlusMinusClass&) = default;
};

struct Term {
    std::size_t index = 0;  // 1-based position in the source sequence
    BigInt value;
};

/// Integer sequence a_1..a_M. Selecting a subsequence keeps original indices.
class IntSequence {
public:
    IntSequence() = default;
    explicit IntSequence(std::vector<BigInt> values);
    IntSequence(std::initializer_list<long> values);

    static IntSequence from_ints(std::span<const std::int64_t> values);
    /// Terms must have strictly increasing indices.
    static IntSequence from_terms(std::vector<Term> terms);

    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] const Term& operator[](std::size_t pos) const { return terms_[pos]; }
    [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
    [[nodiscard]] auto begin() const noexcept { return terms_.begin(); }
    [[nodiscard]] auto end() const noexcept { return terms_.end(); }

    [[nodiscard]] std::vector<BigInt> values() const;
    [[nodiscard]] std::vector<std::size_t> indices() const;
    [[nodiscard]] BigInt sum() const;

    /// Value of the term with the given original index.
    [[nodiscard]] const BigInt& at_index(std::size_t index) const;

    /// Terms whose original index is listed, in sequence order.
    [[nodiscard]] IntSequence select(std::span<const std::size_t> original_indices) const;
    /// Terms whose original index is not listed, in sequence order.
    [[nodiscard]] IntSequence without(std::span<const std::size_t> original_indices) const;

private:
    std::vector<Term> terms_;
};

[[nodiscard]] Residue normalize_residue(const BigInt& a, const Modulus& m);
[[nodiscard]] Residue normalize_residue(std::int64_t a, const Modulus& m);

[[nodiscard]] PlusMinusClass pm_class(const BigInt& a, const Modulus& n);
[[nodiscard]] PlusMinusClass pm_class(std::int64_t a, const Modulus& n);
/// Class of a residue already reduced into [0, 2N).
[[nodiscard]] PlusMinusClass pm_class_of_residue(std::int64_t r, std::int64_t twice_n) noexcept;

/// Nonnegative remainder of a modulo m, for any m >= 1 up to 2 * Modulus::max_value.
[[nodiscard]] std::int64_t mod_floor(const BigInt& a, std::int64_t m);

/// Residues of every term mod m, in sequence order.
[[nodiscard]] std::vector<std::int64_t> residues(const IntSequence& seq, std::int64_t m);

}  // namespace equisub
