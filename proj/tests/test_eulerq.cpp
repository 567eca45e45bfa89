#include "doctest.h"

#include <random>
#include <set>

#include "eqseq/errors.hpp"
#include "eqseq/eulerq.hpp"
#include "oracles.hpp"

using namespace eqseq;

TEST_CASE("euler_quotient examples") {
    const auto pair = PrimePair::checked(3, 7);
    CHECK(euler_quotient(1, pair) == 0);
    CHECK(euler_quotient(22, pair) == 12);
    CHECK(euler_quotient(2, pair) == 6);
    CHECK(euler_quotient(5, pair) == 18);
    CHECK(euler_quotient(7, pair) == 0);
    CHECK(oracle::euler_quotient(2, 3, 7) == 6);
    CHECK(oracle::euler_quotient(5, 3, 7) == 18);
}

TEST_CASE("euler_quotient agrees with big-integer definition") {
    for (auto [p, q] : {std::pair<u64, u64>{3, 7}, {5, 11}, {3, 13}, {5, 7}}) {
        const auto pair = PrimePair::relaxed(p, q);
        for (u64 t = 0; t < 300; ++t) CHECK(euler_quotient(t, pair) == oracle::euler_quotient(t, p, q));
    }
}

TEST_CASE("coset_index") {
    const auto pair = PrimePair::checked(3, 7);
    CHECK_FALSE(coset_index(7, pair).has_value());
    CHECK(coset_index(2, pair) == u64{2});
    CHECK(coset_index(1, pair) == u64{0});
    CHECK_THROWS_AS(coset_index(2, PrimePair::relaxed(5, 7)), ContractError);
}

TEST_CASE("find_ghat") {
    const auto p37 = PrimePair::checked(3, 7);
    CHECK(find_ghat(p37, 5) == 43);
    for (auto [p, q] : {std::pair<u64, u64>{3, 7}, {3, 13}, {5, 11}, {7, 29}, {3, 181}}) {
        const auto pair = PrimePair::checked(p, q);
        const auto gens = make_generators(pair);
        CHECK(euler_quotient(gens.ghat, pair) == p);
        CHECK(gens.h % p == gens.g % p);
        CHECK(gens.h % (q * q) == 1);
    }
    CHECK(make_generators(PrimePair::checked(3, 13)).ghat == 256);
    CHECK(make_generators(PrimePair::checked(3, 7)).h == 50);
}

TEST_CASE("build_table") {
    const auto table = EulerQuotientTable::build(PrimePair::checked(3, 7));
    CHECK(table.size() == 147);
    CHECK(table.unit_count() == 84);
    CHECK(table[22] == 12);
    CHECK(table[21] == 0);
    u64 forced_zero = 0;
    for (u64 t = 0; t < 147; ++t) forced_zero += table.is_unit(t) ? 0 : 1;
    CHECK(forced_zero == 63);
    CHECK_THROWS_AS(EulerQuotientTable::build(PrimePair::checked(3, 7), 100), ResourceError);
}

TEST_CASE("table invariants: zero off units, divisible by p, shift identity, periodicity") {
    for (auto [p, q] : {std::pair<u64, u64>{3, 7}, {5, 11}, {3, 13}, {3, 19}}) {
        const auto pair = PrimePair::checked(p, q);
        const auto table = EulerQuotientTable::build(pair);
        const u64 n = pair.period();
        const u64 pq = pair.pq();
        for (u64 t = 0; t < n; ++t) {
            if (!table.is_unit(t)) {
                CHECK(table[t] == 0);
                continue;
            }
            CHECK(table[t] % p == 0);
            const u64 inv = inverse_mod(t % pq, pq);
            for (u64 k = 0; k < q; ++k) {
                const u64 expected = (table[t] + k * inv % pq * pair.phi_pq()) % pq;
                CHECK(table[(t + k * pq) % n] == expected);
            }
            CHECK(euler_quotient(t + n, pair) == table[t]);
        }
    }
}

TEST_CASE("homomorphism, image and kernel size") {
    const auto pair = PrimePair::checked(3, 7);
    const auto table = EulerQuotientTable::build(pair);
    const u64 n = pair.period();
    std::set<u64> image;
    u64 kernel = 0;
    for (u64 u = 0; u < n; ++u) {
        if (!table.is_unit(u)) continue;
        image.insert(table[u]);
        kernel += table[u] == 0;
        for (u64 v = 0; v < n; ++v) {
            if (!table.is_unit(v)) continue;
            CHECK(table[u * v % n] == (table[u] + table[v]) % 21);
        }
    }
    CHECK(image == std::set<u64>{0, 3, 6, 9, 12, 15, 18});
    CHECK(kernel == 12);

    std::mt19937_64 rng(5);
    for (auto [p, q] : {std::pair<u64, u64>{7, 29}, {23, 47}, {3, 181}}) {
        const auto big = PrimePair::checked(p, q);
        const u64 m = big.period();
        for (int i = 0; i < 2000; ++i) {
            const u64 u = rng() % m;
            const u64 v = rng() % m;
            if (gcd_u64(u, big.pq()) != 1 || gcd_u64(v, big.pq()) != 1) continue;
            CHECK(euler_quotient(mul_mod(u, v, m), big) ==
                  (euler_quotient(u, big) + euler_quotient(v, big)) % big.pq());
        }
    }
}

TEST_CASE("period budget from environment") {
    CHECK(period_budget_from_env() > 0);
}
