#include "eqseq/ntcore.hpp"

#include <algorithm>
#include <string>

#include "eqseq/errors.hpp"

namespace eqseq {

namespace {

using u128 = unsigned __int128;

std::string pair_text(u64 p, u64 q) {
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

// Modular exponentiation without range checks, for internal callers that
// already know the modulus is valid.
u64 pow_mod_raw(u64 base, u64 exp, u64 modulus) noexcept {
    u64 result = 1 % modulus;
    base %= modulus;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) noexcept {
    u64 x = pow_mod_raw(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

PrimePair::PrimePair(u64 p, u64 q) : p_(p), q_(q) {
    d_ = gcd_u64(p - 1, q - 1);
    e_ = (p - 1) / d_ * (q - 1);
}

PrimePair PrimePair::relaxed(u64 p, u64 q) {
    if (p == q) throw DomainError("p and q must be distinct: " + pair_text(p, q));
    if (p % 2 == 0 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
    if (q % 2 == 0 || !is_prime(q)) throw DomainError("q must be an odd prime, got " + std::to_string(q));
    const u128 period = static_cast<u128>(p) * q * q;
    if (period > kMaxPeriod) {
        throw RangeError("period p*q^2 exceeds supported range 2^31 for " + pair_text(p, q));
    }
    return PrimePair(p, q);
}

PrimePair PrimePair::checked(u64 p, u64 q) {
    PrimePair pair = relaxed(p, q);
    if (!pair.divisibility_ok()) throw DomainError("p must divide q-1: " + pair_text(p, q));
    return pair;
}

u64 gcd_u64(u64 a, u64 b) noexcept {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 mul_mod(u64 a, u64 b, u64 modulus) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases make Miller-Rabin deterministic below 3.3 * 10^24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

std::vector<u64> factorize(u64 n) {
    std::vector<u64> factors;
    while (n % 2 == 0 && n > 1) {
        factors.push_back(2);
        n /= 2;
    }
    for (u64 f = 3; f <= n / f; f += 2) {
        while (n % f == 0) {
            factors.push_back(f);
            n /= f;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

std::vector<u64> prime_divisors(u64 n) {
    auto factors = factorize(n);
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return factors;
}

u64 totient(u64 n) {
    u64 result = n;
    for (u64 f : prime_divisors(n)) result = result / f * (f - 1);
    return result;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> result{1};
    const auto factors = factorize(n);
    std::size_t i = 0;
    while (i < factors.size()) {
        const u64 prime = factors[i];
        std::size_t multiplicity = 0;
        while (i < factors.size() && factors[i] == prime) {
            ++multiplicity;
            ++i;
        }
        const std::size_t base_count = result.size();
        u64 power = 1;
        for (std::size_t k = 0; k < multiplicity; ++k) {
            power *= prime;
            for (std::size_t j = 0; j < base_count; ++j) result.push_back(result[j] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

u64 pow_wide_mod(u64 base, u64 exp, u64 modulus) {
    if (modulus < 2 || modulus > kMaxWideModulus) {
        throw RangeError("pow_wide_mod: modulus " + std::to_string(modulus) +
                         " outside supported range [2, 2^62]");
    }
    return pow_mod_raw(base, exp, modulus);
}

u64 inverse_mod(u64 a, u64 n) {
    if (n == 1) return 0;
    // Extended Euclid on signed 128-bit values.
    __int128 old_r = static_cast<__int128>(a % n), r = n;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quotient = old_r / r;
        __int128 t = old_r - quotient * r;
        old_r = r;
        r = t;
        t = old_s - quotient * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw DomainError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(n));
    }
    __int128 inv = old_s % static_cast<__int128>(n);
    if (inv < 0) inv += n;
    return static_cast<u64>(inv);
}

u64 multiplicative_order(u64 a, u64 n) {
    if (n < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
    if (gcd_u64(a % n, n) != 1) {
        throw DomainError("multiplicative_order: " + std::to_string(a) + " is not a unit modulo " +
                          std::to_string(n));
    }
    u64 order = totient(n);
    for (u64 f : prime_divisors(order)) {
        while (order % f == 0 && pow_wide_mod(a, order / f, n) == 1) order /= f;
    }
    return order;
}

u64 find_common_primitive_root(const PrimePair& pair) {
    const u64 p = pair.p();
    const u64 q = pair.q();
    const u64 q2 = pair.q2();
    for (u64 g = 2;; ++g) {
        if (g % p == 0 || g % q == 0) continue;
        if (multiplicative_order(g, p) == p - 1 && multiplicative_order(g, q2) == q * (q - 1)) {
            return g;
        }
    }
}

u64 crt_lift(std::span<const Congruence> residues) {
    u64 value = 0;
    u64 modulus = 1;
    for (const auto& c : residues) {
        if (c.modulus == 0) throw DomainError("crt_lift: zero modulus");
        if (gcd_u64(modulus, c.modulus) != 1) {
            throw DomainError("crt_lift: moduli are not pairwise coprime (" + std::to_string(c.modulus) + ")");
        }
        const u128 combined = static_cast<u128>(modulus) * c.modulus;
        if (combined > ~u64{0}) throw RangeError("crt_lift: product of moduli exceeds 64 bits");
        // value + modulus * k == residue (mod c.modulus)
        const u64 target = c.residue % c.modulus;
        const u64 current = value % c.modulus;
        const u64 diff = (target + c.modulus - current) % c.modulus;
        const u64 k = mul_mod(diff, inverse_mod(modulus % c.modulus, c.modulus), c.modulus);
        value = static_cast<u64>(value + static_cast<u128>(modulus) * k);
        modulus = static_cast<u64>(combined);
    }
    return value;
}

}  // namespace eqseq
