#include "eqseq/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>

#include "eqseq/errors.hpp"
#include "eqseq/ntcore.hpp"
#include "eqseq/sequence.hpp"

namespace eqseq {

namespace {

using Words = std::vector<std::uint64_t>;
constexpr std::size_t W = Gf2Poly::kWordBits;

std::size_t words_for_degree(std::size_t degree) { return degree / W + 1; }

// Degree of a word vector, or nullopt when every word is zero.
std::optional<std::size_t> degree_of(const Words& words) noexcept {
    for (std::size_t i = words.size(); i-- > 0;) {
        if (words[i] != 0) return i * W + (W - 1 - static_cast<std::size_t>(std::countl_zero(words[i])));
    }
    return std::nullopt;
}

// dst ^= src << shift. dst must be large enough to hold the shifted source.
void xor_shifted(Words& dst, std::span<const std::uint64_t> src, std::size_t shift) noexcept {
    const std::size_t word_shift = shift / W;
    const std::size_t bit_shift = shift % W;
    if (bit_shift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + word_shift] ^= (src[i] << bit_shift) | carry;
        carry = src[i] >> (W - bit_shift);
    }
    if (carry != 0) dst[src.size() + word_shift] ^= carry;
}

// Reduces `rem` modulo the nonzero divisor in place, recording quotient bits
// when `quotient` is non-null.
void reduce(Words& rem, std::span<const std::uint64_t> divisor, std::size_t divisor_degree,
            Words* quotient) {
    auto top = degree_of(rem);
    if (!top || *top < divisor_degree) return;
    if (quotient != nullptr) quotient->assign(words_for_degree(*top - divisor_degree), 0);
    // Headroom so a shifted divisor's carry word never lands past the end.
    rem.push_back(0);
    std::size_t pos = *top;
    while (true) {
        const std::size_t w = pos / W;
        const std::size_t bit = pos % W;
        const std::uint64_t masked = bit == W - 1 ? rem[w] : rem[w] & ((std::uint64_t{1} << (bit + 1)) - 1);
        if (masked == 0) {
            if (w == 0 || w * W - 1 < divisor_degree) break;
            pos = w * W - 1;
            continue;
        }
        pos = w * W + (W - 1 - static_cast<std::size_t>(std::countl_zero(masked)));
        if (pos < divisor_degree) break;
        const std::size_t shift = pos - divisor_degree;
        xor_shifted(rem, divisor, shift);
        if (quotient != nullptr) (*quotient)[shift / W] |= std::uint64_t{1} << (shift % W);
        if (pos == divisor_degree) break;
        --pos;
    }
}

}  // namespace

void Gf2Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
    Gf2Poly f;
    f.words_.assign(words_for_degree(exponent), 0);
    f.words_.back() = std::uint64_t{1} << (exponent % W);
    return f;
}

Gf2Poly Gf2Poly::x_pow_plus_one(std::size_t n) {
    Gf2Poly f = monomial(n);
    f.words_[0] ^= 1;
    f.trim();
    return f;
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::size_t> exponents) {
    Gf2Poly f;
    if (exponents.empty()) return f;
    f.words_.assign(words_for_degree(*std::max_element(exponents.begin(), exponents.end())), 0);
    for (auto e : exponents) f.words_[e / W] ^= std::uint64_t{1} << (e % W);
    f.trim();
    return f;
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
    Gf2Poly f;
    f.words_ = std::move(words);
    f.trim();
    return f;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) throw DomainError("empty polynomial text");
    if (compact == "0") return Gf2Poly{};

    std::vector<std::size_t> exponents;
    std::size_t start = 0;
    while (start <= compact.size()) {
        std::size_t end = compact.find('+', start);
        if (end == std::string::npos) end = compact.size();
        const std::string_view term(compact.data() + start, end - start);
        if (term == "1") {
            exponents.push_back(0);
        } else if (term == "x") {
            exponents.push_back(1);
        } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
            std::size_t e = 0;
            auto [ptr, ec] = std::from_chars(term.data() + 2, term.data() + term.size(), e);
            if (ec != std::errc{} || ptr != term.data() + term.size()) {
                throw DomainError("bad exponent in term '" + std::string(term) + "'");
            }
            exponents.push_back(e);
        } else {
            throw DomainError("bad polynomial term '" + std::string(term) + "'");
        }
        start = end + 1;
    }
    return from_exponents(exponents);
}

std::optional<std::size_t> Gf2Poly::degree() const noexcept { return degree_of(words_); }

void Gf2Poly::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / W;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % W);
    words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
    trim();
}

std::size_t Gf2Poly::term_count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> Gf2Poly::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = words_.size(); i-- > 0;) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            const int top = W - 1 - std::countl_zero(w);
            out.push_back(i * W + static_cast<std::size_t>(top));
            w &= ~(std::uint64_t{1} << top);
        }
    }
    return out;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto e : exponents()) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += "1";
        } else if (e == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(e);
        }
    }
    return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return Gf2Poly{};
    // Iterate over the sparser operand's set bits.
    const Gf2Poly& sparse = a.term_count() <= b.term_count() ? a : b;
    const Gf2Poly& dense = &sparse == &a ? b : a;
    Words product(a.words_.size() + b.words_.size() + 1, 0);
    for (std::size_t i = 0; i < sparse.words_.size(); ++i) {
        std::uint64_t w = sparse.words_[i];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            xor_shifted(product, dense.words_, i * W + static_cast<std::size_t>(bit));
            w &= w - 1;
        }
    }
    return Gf2Poly::from_words(std::move(product));
}

DivRem divrem(const Gf2Poly& f, const Gf2Poly& g) {
    const auto dg = g.degree();
    if (!dg) throw DomainError("division by the zero polynomial");
    Words rem(f.words().begin(), f.words().end());
    Words quotient;
    reduce(rem, g.words(), *dg, &quotient);
    return {Gf2Poly::from_words(std::move(quotient)), Gf2Poly::from_words(std::move(rem))};
}

Gf2Poly mod(const Gf2Poly& f, const Gf2Poly& g) {
    const auto dg = g.degree();
    if (!dg) throw DomainError("division by the zero polynomial");
    Words rem(f.words().begin(), f.words().end());
    reduce(rem, g.words(), *dg, nullptr);
    return Gf2Poly::from_words(std::move(rem));
}

Gf2Poly exact_div(const Gf2Poly& f, const Gf2Poly& g) {
    auto [quotient, remainder] = divrem(f, g);
    if (!remainder.is_zero()) throw InternalError("division expected to be exact left a remainder");
    return quotient;
}

Gf2Poly gcd(const Gf2Poly& f, const Gf2Poly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    Words a(f.words().begin(), f.words().end());
    Words b(g.words().begin(), g.words().end());
    auto trim = [](Words& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    while (true) {
        const auto db = degree_of(b);
        if (!db) break;
        reduce(a, b, *db, nullptr);
        trim(a);
        std::swap(a, b);
    }
    return Gf2Poly::from_words(std::move(a));
}

Gf2Poly compose_power(const Gf2Poly& f, std::size_t k, std::size_t max_degree) {
    if (k == 0) throw DomainError("compose_power requires k >= 1");
    const auto df = f.degree();
    if (!df) return Gf2Poly{};
    if (*df != 0 && *df > max_degree / k) {
        throw ResourceError("compose_power: degree " + std::to_string(*df) + "*" + std::to_string(k) +
                            " exceeds budget " + std::to_string(max_degree));
    }
    Words out(words_for_degree(*df * k), 0);
    for (auto e : f.exponents()) {
        const std::size_t target = e * k;
        out[target / W] |= std::uint64_t{1} << (target % W);
    }
    return Gf2Poly::from_words(std::move(out));
}

Gf2Poly reciprocal(const Gf2Poly& f) {
    const auto df = f.degree();
    if (!df) throw DomainError("reciprocal of the zero polynomial");
    Words out(words_for_degree(*df), 0);
    for (auto e : f.exponents()) {
        const std::size_t target = *df - e;
        out[target / W] |= std::uint64_t{1} << (target % W);
    }
    return Gf2Poly::from_words(std::move(out));
}

namespace {

const Gf2Poly& cyclotomic_memo(std::size_t n, std::map<std::size_t, Gf2Poly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    Gf2Poly result = Gf2Poly::x_pow_plus_one(n);
    for (u64 d : divisors(n)) {
        if (d == n) break;
        result = exact_div(result, cyclotomic_memo(d, memo));
    }
    return memo.emplace(n, std::move(result)).first->second;
}

}  // namespace

Gf2Poly cyclotomic_f2(std::size_t n, std::size_t max_degree) {
    if (n == 0 || n % 2 == 0) {
        throw DomainError("cyclotomic_f2 supports odd n only, got " + std::to_string(n));
    }
    if (n > max_degree) {
        throw ResourceError("cyclotomic_f2: n=" + std::to_string(n) + " exceeds degree budget");
    }
    std::map<std::size_t, Gf2Poly> memo;
    return cyclotomic_memo(n, memo);
}

Gf2Poly generating_polynomial(const BitSequence& seq) {
    const auto words = seq.words();
    return Gf2Poly::from_words(std::vector<std::uint64_t>(words.begin(), words.end()));
}

}  // namespace eqseq
