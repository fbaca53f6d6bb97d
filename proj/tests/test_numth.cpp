#include <doctest.h>

#include <elusive/numth.hpp>

#include <cstdint>

using namespace elusive;

TEST_CASE("mul_mod and pow_mod handle large operands") {
    CHECK(mul_mod(3, 4, 5) == 2);
    // products that overflow 64 bits
    std::uint64_t big = 0xffffffffffffff43ull;  // large prime-ish modulus base
    CHECK(mul_mod(big - 1, big - 1, big) == 1);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(7, 0, 13) == 1);
    // Fermat: a^(p-1) = 1 mod p
    CHECK(pow_mod(2, 1000000006, 1000000007) == 1);
}

TEST_CASE("is_prime is deterministic on known values") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(561));    // Carmichael
    CHECK(!is_prime(29341));  // Carmichael
    CHECK(is_prime(2147483647ull));           // 2^31 - 1
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
    CHECK(!is_prime(2305843009213693953ull));
    CHECK(!is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    int count = 0;
    for (std::uint64_t k = 2; k < 100; ++k) count += is_prime(k);
    CHECK(count == 25);
}

TEST_CASE("factorize returns sorted prime powers") {
    auto f = factorize(720);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 4});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{5, 1});
    CHECK(factorize(1).empty());
    auto g = factorize(13);
    REQUIRE(g.size() == 1);
    CHECK(g[0].first == 13);
}

TEST_CASE("legendre symbol on small primes") {
    // squares mod 7: 1,2,4
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(4, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(5, 7) == -1);
    CHECK(legendre(6, 7) == -1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(14, 7) == 0);
    // negative arguments reduce mod p
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
    // second supplement: (2/p) = 1 iff p = +-1 mod 8
    CHECK(legendre(2, 17) == 1);
    CHECK(legendre(2, 19) == -1);
}

TEST_CASE("phi_rq multiplicative orders") {
    CHECK(phi_rq(7, 2) == 3);
    CHECK(phi_rq(7, 3) == 6);
    CHECK(phi_rq(7, 13) == 2);  // 13 = 6 mod 7
    CHECK(phi_rq(5, 7) == 4);
    CHECK(phi_rq(11, 3) == 5);
    CHECK(phi_rq(3, 7) == 1);  // 7 = 1 mod 3
    CHECK(phi_rq(2, 9) == 1);
}

TEST_CASE("valuation") {
    CHECK(valuation(48, 2) == 4);
    CHECK(valuation(54, 3) == 3);
    CHECK(valuation(7, 5) == 0);
    CHECK(valuation(125, 5) == 3);
    CHECK(valuation(1, 7) == 0);
}

TEST_CASE("partitions with bounded parts") {
    auto all5 = p_bounded_partitions(5, 5);
    CHECK(all5.size() == 7);
    CHECK(all5.front().parts == std::vector<unsigned>{5});
    CHECK(all5.back().parts == std::vector<unsigned>{1, 1, 1, 1, 1});

    auto b2 = p_bounded_partitions(6, 2);
    CHECK(b2.size() == 4);
    for (const auto& lam : b2) {
        CHECK(lam.sum() == 6);
        for (unsigned part : lam.parts) CHECK(part <= 2);
    }

    CHECK(p_bounded_partitions(0, 3).size() == 1);  // the empty partition
    CHECK(p_bounded_partitions(4, 1).size() == 1);

    Partition lam{{6, 4, 2}};
    CHECK(lam.sum() == 12);
    CHECK(lam.parts_gcd() == 2);
    Partition mu{{5, 3}};
    CHECK(mu.parts_gcd() == 1);
}
