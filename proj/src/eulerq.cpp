#include "eqseq/eulerq.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "eqseq/errors.hpp"

namespace eqseq {

u64 period_budget_from_env() {
    const char* raw = std::getenv("EQSEQ_MAX_PERIOD");
    if (raw == nullptr || *raw == '\0') return kDefaultPeriodBudget;
    u64 value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        throw DomainError(std::string("EQSEQ_MAX_PERIOD must be a positive integer, got '") + raw + "'");
    }
    return value;
}

u64 euler_quotient(u64 t, const PrimePair& pair) {
    const u64 pq = pair.pq();
    if (gcd_u64(t, pq) != 1) return 0;
    const u64 power = pow_wide_mod(t, pair.phi_pq(), pq * pq);
    // power == 1 (mod pq) by Euler's theorem, so the division is exact.
    return (power - 1) / pq;
}

std::optional<u64> coset_index(u64 t, const PrimePair& pair) {
    if (!pair.divisibility_ok()) {
        throw ContractError("coset_index requires p | q-1");
    }
    if (gcd_u64(t, pair.pq()) != 1) return std::nullopt;
    const u64 value = euler_quotient(t, pair);
    if (value % pair.p() != 0) {
        throw InternalError("euler quotient of unit " + std::to_string(t) + " is " + std::to_string(value) +
                            ", not a multiple of p");
    }
    return value / pair.p();
}

u64 find_ghat(const PrimePair& pair, u64 g) {
    const u64 p = pair.p();
    const u64 q = pair.q();
    const u64 psi_g = euler_quotient(g, pair);
    if (psi_g % p != 0 || (psi_g / p) % q == 0) {
        throw ContractError("find_ghat: euler quotient of g=" + std::to_string(g) + " is not p*a with a a unit mod q");
    }
    const u64 a = psi_g / p;
    const u64 b = inverse_mod(a, q);
    const u64 ghat = pow_wide_mod(g, b, pair.period());
    if (euler_quotient(ghat, pair) != p) {
        throw InternalError("find_ghat: euler quotient of ghat=" + std::to_string(ghat) + " is not p");
    }
    return ghat;
}

GroupGenerators make_generators(const PrimePair& pair) {
    if (!pair.divisibility_ok()) throw ContractError("make_generators requires p | q-1");
    GroupGenerators gens;
    gens.g = find_common_primitive_root(pair);
    const Congruence system[] = {{gens.g % pair.p(), pair.p()}, {1, pair.q2()}};
    gens.h = crt_lift(system);
    gens.ghat = find_ghat(pair, gens.g);
    return gens;
}

EulerQuotientTable EulerQuotientTable::build(const PrimePair& pair, u64 max_period) {
    const u64 n = pair.period();
    if (n > max_period) {
        throw ResourceError("period " + std::to_string(n) + " exceeds budget " + std::to_string(max_period));
    }
    std::vector<std::uint32_t> values(n, 0);
    u64 units = 0;
    for (u64 t = 0; t < n; ++t) {
        if (gcd_u64(t, pair.pq()) != 1) continue;
        values[t] = static_cast<std::uint32_t>(euler_quotient(t, pair));
        ++units;
    }
    return EulerQuotientTable(pair, std::move(values), units);
}

}  // namespace eqseq
