#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eqseq/ntcore.hpp"

namespace eqseq {

/// Default ceiling on the period of tables and sequences, overridable through
/// the EQSEQ_MAX_PERIOD environment variable.
inline constexpr u64 kDefaultPeriodBudget = 1'000'000;

/// Period budget from EQSEQ_MAX_PERIOD, or kDefaultPeriodBudget when unset.
/// Throws DomainError if the variable is set but not a positive integer.
u64 period_budget_from_env();

/// Euler quotient modulo pq: ((t^phi(pq) - 1) / pq) mod pq for units,
/// 0 when gcd(t, pq) != 1. Evaluated through t^phi(pq) mod (pq)^2.
u64 euler_quotient(u64 t, const PrimePair& pair);

/// l in [0, q) with euler_quotient(t) == p*l, or nullopt for non-units.
/// Throws InternalError if a unit's quotient is not a multiple of p, and
/// ContractError if the pair does not satisfy p | q-1.
std::optional<u64> coset_index(u64 t, const PrimePair& pair);

/// ghat = g^b mod pq^2 where psi(g) = p*a and b = a^-1 mod q. Checks psi(ghat) == p.
u64 find_ghat(const PrimePair& pair, u64 g);

/// g, h and ghat for a pair satisfying p | q-1.
GroupGenerators make_generators(const PrimePair& pair);

/// Euler quotients of every t in [0, pq^2).
class EulerQuotientTable {
public:
    /// Throws ResourceError if the period exceeds `max_period`.
    static EulerQuotientTable build(const PrimePair& pair, u64 max_period = period_budget_from_env());

    const PrimePair& pair() const noexcept { return pair_; }
    std::span<const std::uint32_t> values() const noexcept { return values_; }
    u64 operator[](u64 t) const noexcept { return values_[t]; }
    u64 size() const noexcept { return values_.size(); }

    /// Number of t with gcd(t, pq) == 1.
    u64 unit_count() const noexcept { return unit_count_; }
    bool is_unit(u64 t) const noexcept { return gcd_u64(t, pair_.pq()) == 1; }

private:
    EulerQuotientTable(PrimePair pair, std::vector<std::uint32_t> values, u64 unit_count)
        : pair_(pair), values_(std::move(values)), unit_count_(unit_count) {}

    PrimePair pair_;
    std::vector<std::uint32_t> values_;
    u64 unit_count_;
};

}  // namespace eqseq
