#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eqseq/gf2poly.hpp"
#include "eqseq/ntcore.hpp"
#include "eqseq/partition.hpp"

namespace eqseq {

/// Period at or below which translation and homomorphism checks run over
/// every pair of units; above it they sample.
inline constexpr u64 kExhaustiveLimit = 10'000;
inline constexpr std::size_t kDefaultSamples = 10'000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'0f'e01e;

struct AuditOptions {
    u64 exhaustive_limit = kExhaustiveLimit;
    std::size_t samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
};

struct CheckResult {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string message) {
        ok = false;
        failures.push_back(std::move(message));
    }
};

struct StructureReport {
    u64 p = 0;
    u64 q = 0;
    bool lemma2_ok = false;
    bool lemma3_ok = false;
    bool lemma4_ok = false;
    bool lemma5_ok = false;
    bool lemma6_ok = false;
    bool lemma7_ok = false;
    bool lemma8_ok = false;
    bool lemma9_ok = false;
    u64 sigma = 0;
    /// Keyed "lemma2" .. "lemma9"; empty when every check passed.
    std::map<std::string, std::string> details;

    bool all_ok() const noexcept {
        return lemma2_ok && lemma3_ok && lemma4_ok && lemma5_ok && lemma6_ok && lemma7_ok && lemma8_ok &&
               lemma9_ok;
    }
};

/// D_l(x) = sum over u in D_l of x^u.
Gf2Poly coset_polynomial(const CosetPartition& partition, u64 l);

/// Kernel is <g^q, h> with (p-1)(q-1) elements, image is p*Z_pq, psi is a
/// homomorphism on units.
CheckResult check_kernel_image(const PrimePair& pair, const GroupGenerators& gens, const EulerQuotientTable& table,
                               const CosetPartition& partition, const AuditOptions& options = {});

/// Partition shape: q disjoint cosets of size (p-1)(q-1) plus P, D_l = ghat^l D_0,
/// and the sum of the upper cosets is the sequence's generating polynomial.
CheckResult check_partition(const PrimePair& pair, const GroupGenerators& gens, const EulerQuotientTable& table,
                            const CosetPartition& partition);

/// u in D_j implies u*D_i = D_{i+j}; doubling maps D_l onto D_{l+sigma}.
CheckResult check_translation(const PrimePair& pair, const CosetPartition& partition, const AuditOptions& options = {});

/// Residue multisets of each D_l modulo p and q.
CheckResult check_residues_mod_p_q(const PrimePair& pair, const CosetPartition& partition);
/// Reduction mod pq is a bijection D_l -> Z*_pq.
CheckResult check_residues_mod_pq(const PrimePair& pair, const CosetPartition& partition);
/// D_l mod q^2 covers ghat^l <g^q> with multiplicity p-1.
CheckResult check_residues_mod_q2(const PrimePair& pair, const GroupGenerators& gens,
                                  const CosetPartition& partition);

/// D_l(x) = 1 mod Phi_pq and 0 mod Phi_p, Phi_q, Phi_{q^2} for every l.
CheckResult check_coset_congruences(const PrimePair& pair, const CosetPartition& partition);
/// Sum of all D_l(x) is 1 mod Phi_pq and 0 mod Phi_p Phi_q Phi_{q^2} Phi_{pq^2}.
CheckResult check_unit_sum_congruences(const PrimePair& pair, const CosetPartition& partition);

/// All residue multiset checks (mod p, q, pq and q^2).
CheckResult check_residue_multisets(const PrimePair& pair, const GroupGenerators& gens,
                                    const CosetPartition& partition);

/// Per-coset and unit-sum congruences together.
CheckResult check_congruences(const PrimePair& pair, const CosetPartition& partition);

/// Coset index of 2. Throws ContractError without p | q-1 and the condition
/// 2^{q-1} != 1 mod q^2, InternalError if the index comes out 0.
u64 two_coset_index(const PrimePair& pair);

/// Runs every check. Throws ContractError unless p | q-1.
StructureReport audit_structure(const PrimePair& pair, const AuditOptions& options = {});

}  // namespace eqseq
