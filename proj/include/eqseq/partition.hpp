#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eqseq/eulerq.hpp"

namespace eqseq {

/// The units of Z_{pq^2} split into cosets D_0..D_{q-1} of the kernel of psi,
/// D_l = { t : psi(t) = p*l }, plus the non-unit positions P.
class CosetPartition {
public:
    static constexpr std::int32_t kNonUnit = -1;

    const PrimePair& pair() const noexcept { return pair_; }

    /// Sorted elements of D_l.
    std::span<const u64> coset(u64 l) const { return cosets_.at(l); }
    std::size_t coset_count() const noexcept { return cosets_.size(); }

    /// Sorted elements of P.
    std::span<const u64> non_units() const noexcept { return non_units_; }

    /// Coset index of t in [0, pq^2), nullopt for non-units.
    std::optional<u64> index_of(u64 t) const noexcept {
        const auto idx = index_[t];
        if (idx == kNonUnit) return std::nullopt;
        return static_cast<u64>(idx);
    }

    /// Raw index array: entry t is the coset of t or kNonUnit.
    std::span<const std::int32_t> index_array() const noexcept { return index_; }

    friend CosetPartition build_partition(const EulerQuotientTable& table);

private:
    explicit CosetPartition(PrimePair pair) : pair_(pair) {}

    PrimePair pair_;
    std::vector<std::vector<u64>> cosets_;
    std::vector<u64> non_units_;
    std::vector<std::int32_t> index_;
};

/// Throws ContractError unless p | q-1, InternalError if some unit's quotient
/// is not a multiple of p.
CosetPartition build_partition(const EulerQuotientTable& table);
CosetPartition build_partition(const PrimePair& pair);

}  // namespace eqseq
