#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqseq {

class BitSequence;

/// Largest degree compose_power and cyclotomic_f2 will produce by default.
inline constexpr std::size_t kDefaultDegreeBudget = std::size_t{1} << 26;

/// Dense polynomial over GF(2). Bit i of the packed words is the coefficient
/// of x^i. The word vector never carries zero words above the leading term, so
/// equality is plain vector equality and the zero polynomial has no words.
class Gf2Poly {
public:
    static constexpr std::size_t kWordBits = 64;

    Gf2Poly() = default;

    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(std::size_t exponent);
    /// x^n + 1
    static Gf2Poly x_pow_plus_one(std::size_t n);
    static Gf2Poly from_exponents(std::span<const std::size_t> exponents);
    static Gf2Poly from_words(std::vector<std::uint64_t> words);

    /// Parses the rendering produced by to_string ("x^3 + x + 1", "0", "1").
    /// Whitespace is ignored and repeated terms cancel. Throws DomainError.
    static Gf2Poly parse(std::string_view text);

    bool is_zero() const noexcept { return words_.empty(); }

    /// Index of the leading term; nullopt stands for the zero polynomial's
    /// degree of negative infinity.
    std::optional<std::size_t> degree() const noexcept;

    bool coeff(std::size_t i) const noexcept {
        const std::size_t w = i / kWordBits;
        return w < words_.size() && ((words_[w] >> (i % kWordBits)) & 1U);
    }
    void set_coeff(std::size_t i, bool value);

    std::size_t term_count() const noexcept;

    /// Exponents of nonzero terms, descending.
    std::vector<std::size_t> exponents() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Descending powers joined by " + ", e.g. "x^3 + x + 1".
    std::string to_string() const;

    Gf2Poly& operator+=(const Gf2Poly& other);
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

private:
    void trim() noexcept;

    std::vector<std::uint64_t> words_;
};

inline Gf2Poly add(const Gf2Poly& f, const Gf2Poly& g) { return f + g; }
inline Gf2Poly mul(const Gf2Poly& f, const Gf2Poly& g) { return f * g; }

struct DivRem {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

/// f = quotient*g + remainder with deg remainder < deg g. Throws DomainError if g == 0.
DivRem divrem(const Gf2Poly& f, const Gf2Poly& g);

/// f mod g. Throws DomainError if g == 0.
Gf2Poly mod(const Gf2Poly& f, const Gf2Poly& g);

/// Quotient of a division known to be exact. Throws InternalError on a nonzero remainder.
Gf2Poly exact_div(const Gf2Poly& f, const Gf2Poly& g);

/// Euclidean gcd. Throws DomainError if both are zero.
Gf2Poly gcd(const Gf2Poly& f, const Gf2Poly& g);

/// f(x^k). Throws DomainError if k == 0, ResourceError past max_degree.
Gf2Poly compose_power(const Gf2Poly& f, std::size_t k, std::size_t max_degree = kDefaultDegreeBudget);

/// x^deg f * f(1/x) for nonzero f.
Gf2Poly reciprocal(const Gf2Poly& f);

/// Reduction mod 2 of the n-th cyclotomic polynomial, computed over GF(2) by
/// dividing x^n + 1 by Phi_d for every proper divisor d of n. Odd n only:
/// throws DomainError for even or zero n, ResourceError if n > max_degree.
Gf2Poly cyclotomic_f2(std::size_t n, std::size_t max_degree = kDefaultDegreeBudget);

/// One period of the sequence read as coefficients.
Gf2Poly generating_polynomial(const BitSequence& seq);

}  // namespace eqseq
