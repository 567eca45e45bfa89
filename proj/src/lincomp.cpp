#include "eqseq/lincomp.hpp"

#include <bit>
#include <string>
#include <vector>

#include "eqseq/errors.hpp"
#include "eqseq/eulerq.hpp"

namespace eqseq {

namespace {

using Words = std::vector<std::uint64_t>;
constexpr std::size_t W = 64;

// 64 bits of `bits` starting at bit offset `offset`; reads past the end as zero.
std::uint64_t window64(const Words& bits, std::size_t offset) noexcept {
    const std::size_t w = offset / W;
    const std::size_t b = offset % W;
    const std::uint64_t lo = w < bits.size() ? bits[w] : 0;
    if (b == 0) return lo;
    const std::uint64_t hi = w + 1 < bits.size() ? bits[w + 1] : 0;
    return (lo >> b) | (hi << (W - b));
}

}  // namespace

LfsrSynthesis berlekamp_massey(const BitSequence& bits) {
    const std::size_t m_len = bits.length();
    const std::size_t words = m_len / W + 2;

    // reversed[j] = s[M-1-j], so the window s[n], s[n-1], ..., s[n-L] is the
    // contiguous run reversed[M-1-n .. M-1-n+L], aligned with C's coefficients.
    Words reversed(words, 0);
    for (std::size_t t = 0; t < m_len; ++t) {
        if (bits[t]) {
            const std::size_t j = m_len - 1 - t;
            reversed[j / W] |= std::uint64_t{1} << (j % W);
        }
    }

    Words connection(words, 0);
    Words previous(words, 0);
    Words scratch(words, 0);
    connection[0] = 1;
    previous[0] = 1;
    std::size_t length = 0;
    std::size_t previous_length = 0;
    std::size_t shift = 1;

    for (std::size_t n = 0; n < m_len; ++n) {
        const std::size_t offset = m_len - 1 - n;
        const std::size_t used = length / W + 1;
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < used; ++k) acc ^= connection[k] & window64(reversed, offset + k * W);
        const bool discrepancy = std::popcount(acc) & 1;
        if (!discrepancy) {
            ++shift;
            continue;
        }
        const bool grow = 2 * length <= n;
        if (grow) scratch = connection;
        // connection += x^shift * previous
        const std::size_t prev_words = previous_length / W + 1;
        const std::size_t ws = shift / W;
        const std::size_t bs = shift % W;
        for (std::size_t k = 0; k < prev_words && k + ws < words; ++k) {
            connection[k + ws] ^= previous[k] << bs;
            if (bs != 0 && k + ws + 1 < words) connection[k + ws + 1] ^= previous[k] >> (W - bs);
        }
        if (grow) {
            previous_length = length;
            length = n + 1 - length;
            std::swap(previous, scratch);
            shift = 1;
        } else {
            ++shift;
        }
    }
    return {length, Gf2Poly::from_words(std::move(connection))};
}

BitSequence lfsr_generate(const LfsrSynthesis& lfsr, const BitSequence& seed, std::size_t count) {
    const std::size_t length = lfsr.length;
    if (seed.length() < length) throw DomainError("seed shorter than the register length");
    BitSequence out(count);
    for (std::size_t t = 0; t < count && t < length; ++t) out.set(t, seed[t]);
    for (std::size_t n = length; n < count; ++n) {
        bool bit = false;
        for (std::size_t i = 1; i <= length; ++i) {
            if (lfsr.connection.coeff(i) && out[n - i]) bit = !bit;
        }
        out.set(n, bit);
    }
    return out;
}

Gf2Poly minimal_polynomial_gcd(const BitSequence& seq) {
    const Gf2Poly modulus = Gf2Poly::x_pow_plus_one(seq.length());
    const Gf2Poly generating = generating_polynomial(seq);
    return exact_div(modulus, gcd(modulus, generating));
}

std::size_t linear_complexity(const BitSequence& seq) {
    return minimal_polynomial_gcd(seq).degree().value_or(0);
}

bool wieferich_condition_ok(u64 q) { return pow_wide_mod(2, q - 1, q * q) != 1; }

namespace {

void require_theorem_hypotheses(const PrimePair& pair) {
    if (!pair.divisibility_ok()) throw ContractError("closed form requires p | q-1");
    if (!wieferich_condition_ok(pair.q())) throw ContractError("closed form requires 2^(q-1) != 1 mod q^2");
}

}  // namespace

Gf2Poly predicted_minimal_polynomial(const PrimePair& pair) {
    require_theorem_hypotheses(pair);
    Gf2Poly result = cyclotomic_f2(pair.period());
    if (pair.q() % 4 == 3) result = result * cyclotomic_f2(pair.pq());
    return result;
}

u64 predicted_linear_complexity(const PrimePair& pair) {
    require_theorem_hypotheses(pair);
    const u64 p = pair.p();
    const u64 q = pair.q();
    return q % 4 == 1 ? (p - 1) * (q * q - q) : (p - 1) * (q * q - 1);
}

AnalysisReport verify_theorem(const PrimePair& pair) {
    const auto started = std::chrono::steady_clock::now();
    AnalysisReport report;
    report.p = pair.p();
    report.q = pair.q();
    report.q_mod_4 = pair.q() % 4;
    report.divisibility_ok = pair.divisibility_ok();
    report.wieferich_ok = wieferich_condition_ok(pair.q());

    const auto table = EulerQuotientTable::build(pair);
    const BitSequence seq = generate_threshold(table);
    report.period_found = least_period(seq);
    report.minpoly_empirical = minimal_polynomial_gcd(seq);
    report.lc_empirical = report.minpoly_empirical.degree().value_or(0);

    const LfsrSynthesis lfsr = berlekamp_massey(seq.repeated(2));
    report.lc_berlekamp_massey = lfsr.length;

    auto note = [&report](const std::string& text) {
        if (!report.diagnostic.empty()) report.diagnostic += "; ";
        report.diagnostic += text;
    };
    if (lfsr.length != report.lc_empirical) {
        note("Berlekamp-Massey length " + std::to_string(lfsr.length) + " differs from gcd-method degree " +
             std::to_string(report.lc_empirical));
    } else if (!(lfsr.connection == report.minpoly_empirical)) {
        // With s_t read as the coefficient of x^t, both are (x^N + 1) / gcd.
        note("Berlekamp-Massey connection polynomial differs from the gcd-method minimal polynomial");
    }

    if (report.divisibility_ok) {
        report.sigma = coset_index(2, pair);
    }
    if (report.theorem_applicable()) {
        report.lc_predicted = predicted_linear_complexity(pair);
        report.minpoly_predicted = predicted_minimal_polynomial(pair);
        if (report.sigma == u64{0}) note("2 lies in D_0 although 2^(q-1) != 1 mod q^2");
        if (report.period_found != pair.period()) {
            note("least period " + std::to_string(report.period_found) + " differs from pq^2");
        }
        report.match = report.diagnostic.empty() && report.minpoly_empirical == *report.minpoly_predicted;
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    return report;
}

}  // namespace eqseq
