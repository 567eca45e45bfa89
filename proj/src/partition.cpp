#include "eqseq/partition.hpp"

#include <string>

#include "eqseq/errors.hpp"

namespace eqseq {

CosetPartition build_partition(const EulerQuotientTable& table) {
    const PrimePair& pair = table.pair();
    if (!pair.divisibility_ok()) throw ContractError("coset partition requires p | q-1");

    CosetPartition partition(pair);
    const u64 n = pair.period();
    const u64 p = pair.p();
    partition.cosets_.resize(pair.q());
    partition.index_.assign(n, CosetPartition::kNonUnit);
    for (u64 t = 0; t < n; ++t) {
        if (!table.is_unit(t)) {
            partition.non_units_.push_back(t);
            continue;
        }
        const u64 value = table[t];
        if (value % p != 0) {
            throw InternalError("euler quotient of unit " + std::to_string(t) + " is not a multiple of p");
        }
        const u64 l = value / p;
        partition.cosets_[l].push_back(t);
        partition.index_[t] = static_cast<std::int32_t>(l);
    }
    return partition;
}

CosetPartition build_partition(const PrimePair& pair) {
    return build_partition(EulerQuotientTable::build(pair));
}

}  // namespace eqseq
