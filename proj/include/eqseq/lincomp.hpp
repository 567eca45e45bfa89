#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "eqseq/gf2poly.hpp"
#include "eqseq/ntcore.hpp"
#include "eqseq/sequence.hpp"

namespace eqseq {

/// Shortest LFSR producing a bit string: s[n] = sum_{i=1..L} c_i s[n-i], with
/// connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L.
struct LfsrSynthesis {
    std::size_t length = 0;
    Gf2Poly connection = Gf2Poly::one();
};

/// Berlekamp-Massey over GF(2) on packed bits.
LfsrSynthesis berlekamp_massey(const BitSequence& bits);

/// Runs the LFSR from the first `length` bits of `seed` for `count` outputs.
/// Throws DomainError if the seed is shorter than the register.
BitSequence lfsr_generate(const LfsrSynthesis& lfsr, const BitSequence& seed, std::size_t count);

/// (x^N + 1) / gcd(x^N + 1, A(x)). The all-zero sequence yields 1. Since s_t is
/// the coefficient of x^t this is also the Berlekamp-Massey connection polynomial.
Gf2Poly minimal_polynomial_gcd(const BitSequence& seq);

/// Degree of the minimal polynomial.
std::size_t linear_complexity(const BitSequence& seq);

/// 2^{q-1} != 1 (mod q^2).
bool wieferich_condition_ok(u64 q);

/// Phi_{pq^2} when q = 1 (mod 4), Phi_{pq^2} * Phi_{pq} when q = 3 (mod 4).
/// Throws ContractError unless p | q-1 and 2^{q-1} != 1 (mod q^2).
Gf2Poly predicted_minimal_polynomial(const PrimePair& pair);

/// (p-1)(q^2-q) or (p-1)(q^2-1) by q mod 4. Same preconditions as above.
u64 predicted_linear_complexity(const PrimePair& pair);

struct AnalysisReport {
    u64 p = 0;
    u64 q = 0;
    u64 q_mod_4 = 0;
    bool divisibility_ok = false;
    bool wieferich_ok = false;
    std::size_t period_found = 0;
    std::size_t lc_empirical = 0;
    std::size_t lc_berlekamp_massey = 0;
    std::optional<u64> lc_predicted;
    Gf2Poly minpoly_empirical;
    std::optional<Gf2Poly> minpoly_predicted;
    bool match = false;
    std::optional<u64> sigma;
    std::chrono::milliseconds elapsed{0};
    /// Empty unless an internal cross-check disagreed.
    std::string diagnostic;

    bool theorem_applicable() const noexcept { return divisibility_ok && wieferich_ok; }
};

/// Generates the sequence for (p, q) and compares its minimal polynomial,
/// computed both by gcd and by Berlekamp-Massey, with the closed form.
AnalysisReport verify_theorem(const PrimePair& pair);

}  // namespace eqseq
