#pragma once

// Exact integer number theory on 64-bit values with 128-bit intermediates.

#include <cstdint>
#include <span>
#include <vector>

namespace eqseq {

using u64 = std::uint64_t;

/// Largest period p*q^2 accepted by PrimePair.
inline constexpr u64 kMaxPeriod = u64{1} << 31;

/// Largest modulus accepted by pow_wide_mod. (pq)^2 < 2^62 whenever pq^2 <= 2^31.
inline constexpr u64 kMaxWideModulus = u64{1} << 62;

/// Two distinct odd primes with the constants derived from them.
///
/// `checked` additionally enforces p | q-1, the standing hypothesis for the
/// sequence family. `relaxed` drops that requirement so empirical analysis can
/// still run on pairs where the theorem does not apply.
class PrimePair {
public:
    static PrimePair checked(u64 p, u64 q);
    static PrimePair relaxed(u64 p, u64 q);

    u64 p() const noexcept { return p_; }
    u64 q() const noexcept { return q_; }
    u64 pq() const noexcept { return p_ * q_; }
    u64 q2() const noexcept { return q_ * q_; }
    u64 d() const noexcept { return d_; }
    u64 e() const noexcept { return e_; }
    u64 phi_pq() const noexcept { return (p_ - 1) * (q_ - 1); }
    u64 period() const noexcept { return p_ * q_ * q_; }
    bool divisibility_ok() const noexcept { return (q_ - 1) % p_ == 0; }

    friend bool operator==(const PrimePair&, const PrimePair&) = default;

private:
    PrimePair(u64 p, u64 q);

    u64 p_;
    u64 q_;
    u64 d_;
    u64 e_;
};

/// g: common primitive root of p and q^2. h: g mod p, 1 mod q^2.
/// ghat: unit with euler_quotient(ghat) == p.
struct GroupGenerators {
    u64 g = 0;
    u64 h = 0;
    u64 ghat = 0;
};

struct Congruence {
    u64 residue;
    u64 modulus;
};

u64 gcd_u64(u64 a, u64 b) noexcept;
u64 mul_mod(u64 a, u64 b, u64 modulus) noexcept;

bool is_prime(u64 n) noexcept;

/// Prime factors with multiplicity, ascending.
std::vector<u64> factorize(u64 n);

/// Distinct prime factors, ascending.
std::vector<u64> prime_divisors(u64 n);

/// Euler's totient.
u64 totient(u64 n);

/// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);

/// base^exp mod modulus. Throws RangeError unless 2 <= modulus <= kMaxWideModulus.
u64 pow_wide_mod(u64 base, u64 exp, u64 modulus);

/// Inverse of a modulo n. Throws DomainError if gcd(a, n) != 1.
u64 inverse_mod(u64 a, u64 n);

/// Smallest k >= 1 with a^k == 1 (mod n). Throws DomainError if gcd(a, n) != 1.
u64 multiplicative_order(u64 a, u64 n);

/// Smallest g >= 2, not divisible by p or q, primitive modulo both p and q^2.
u64 find_common_primitive_root(const PrimePair& pair);

/// Unique solution in [0, prod moduli). Throws DomainError on non-coprime moduli,
/// RangeError if the product overflows 64 bits.
u64 crt_lift(std::span<const Congruence> residues);

}  // namespace eqseq
