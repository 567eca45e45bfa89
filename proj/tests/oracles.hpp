#pragma once

// Slow, independent reference computations used to freeze and cross-check
// expected values. Nothing here calls into the library's arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;
using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// a^k mod n by k-fold multiplication.
inline u64 power_by_repetition(u64 a, u64 k, u64 n) {
    cpp_int r = 1;
    for (u64 i = 0; i < k; ++i) r = (r * a) % n;
    return static_cast<u64>(r);
}

/// Order of a modulo n by walking powers until 1.
inline u64 order(u64 a, u64 n) {
    u64 x = a % n;
    for (u64 k = 1;; ++k) {
        if (x == 1) return k;
        x = static_cast<u64>((cpp_int(x) * a) % n);
    }
}

/// Euler quotient straight from the definition with exact big integers:
/// ((t^phi - 1) / pq) mod pq, zero for non-units.
inline u64 euler_quotient(u64 t, u64 p, u64 q) {
    const u64 pq = p * q;
    if (std::gcd(t, pq) != 1) return 0;
    const cpp_int power = boost::multiprecision::pow(cpp_int(t), static_cast<unsigned>((p - 1) * (q - 1)));
    return static_cast<u64>(((power - 1) / pq) % pq);
}

/// Polynomial over GF(2) as a plain bool vector, index i = coefficient of x^i.
using Poly = std::vector<bool>;

inline void trim(Poly& f) {
    while (!f.empty() && !f.back()) f.pop_back();
}

inline Poly from_exponents(std::initializer_list<std::size_t> exps) {
    Poly f;
    for (auto e : exps) {
        if (f.size() <= e) f.resize(e + 1, false);
        f[e] = !f[e];
    }
    trim(f);
    return f;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] != b[j];
    }
    trim(r);
    return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly quotient;
    trim(a);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        if (quotient.size() <= shift) quotient.resize(shift + 1, false);
        quotient[shift] = true;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] != b[j];
        trim(a);
    }
    trim(quotient);
    return {quotient, a};
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Shortest LFSR length by exhaustive search over all connection
/// polynomials of each length, smallest first.
inline std::size_t brute_force_lfsr_length(const std::vector<int>& s) {
    for (std::size_t length = 0; length <= s.size(); ++length) {
        for (u64 taps = 0; taps < (u64{1} << length); ++taps) {
            bool ok = true;
            for (std::size_t n = length; n < s.size() && ok; ++n) {
                int bit = 0;
                for (std::size_t i = 1; i <= length; ++i) {
                    if ((taps >> (i - 1)) & 1U) bit ^= s[n - i];
                }
                ok = bit == s[n];
            }
            if (ok) return length;
        }
    }
    return s.size();
}

/// Published reference listing: one period of the sequence for p = 3, q = 7.
inline const std::string kReference37Bits =
    "000011001000000000000011011000000010000011"
    "0010100000110000100000100000010110100000"
    "0100000100001100000101001100000100000001"
    "1011000000000000010011000";

/// Exponents of the published minimal polynomial for p = 3, q = 7.
inline const std::vector<std::size_t> kReference37MinpolyExponents = {
    96, 95, 93, 92, 90, 89, 87, 86, 84, 83, 81, 80, 78, 77, 75, 74, 72, 71, 69, 68, 66, 65,
    63, 62, 60, 59, 57, 56, 54, 53, 51, 50, 48, 46, 45, 43, 42, 40, 39, 37, 36, 34, 33,
    31, 30, 28, 27, 25, 24, 22, 21, 19, 18, 16, 15, 13, 12, 10, 9, 7, 6, 4, 3, 1, 0};

}  // namespace oracle
