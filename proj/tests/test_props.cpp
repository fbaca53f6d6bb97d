#include <doctest.h>

#include <elusive/classes.hpp>
#include <elusive/delperm.hpp>
#include <elusive/groups.hpp>
#include <elusive/linalg.hpp>
#include <elusive/numth.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace elusive;

TEST_CASE("property: permutation action on the module is a homomorphism") {
    std::mt19937 rng(940577u);
    std::uniform_int_distribution<int> dim(5, 12);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> pidx(0, 5);

    int checked = 0;
    for (int it = 0; it < 1000; ++it) {
        std::uint32_t d = static_cast<std::uint32_t>(dim(rng));
        std::uint64_t p = primes[pidx(rng)];

        std::vector<std::uint32_t> sig(d), tau(d), comp(d);
        std::iota(sig.begin(), sig.end(), 0u);
        std::iota(tau.begin(), tau.end(), 0u);
        std::shuffle(sig.begin(), sig.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        for (std::uint32_t i = 0; i < d; ++i) comp[i] = sig[tau[i]];

        Mat ms = permutation_matrix_on_module(d, p, sig);
        Mat mt = permutation_matrix_on_module(d, p, tau);
        Mat mc = permutation_matrix_on_module(d, p, comp);
        if (mat_mul_mod(ms, mt, static_cast<std::int64_t>(p)) != mc) {
            CHECK(mat_mul_mod(ms, mt, static_cast<std::int64_t>(p)) == mc);
            break;
        }
        ++checked;
    }
    CHECK(checked == 1000);

    // identity goes to identity
    std::vector<std::uint32_t> id(9);
    std::iota(id.begin(), id.end(), 0u);
    Mat mi = permutation_matrix_on_module(9, 3, id);
    for (int i = 0; i < mi.rows(); ++i)
        for (int j = 0; j < mi.cols(); ++j)
            CHECK(mi(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("property: eigenvalue blocks are cosets of a fixed subgroup") {
    std::mt19937 rng(271828u);
    const std::uint64_t ps[] = {2, 3, 5, 7, 11, 13};
    const std::uint64_t rs[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    std::uniform_int_distribution<int> pick_p(0, 5), pick_r(0, 11), pick_f(1, 2);
    std::uniform_int_distribution<int> pick_fam(0, 5);

    int done = 0;
    for (int it = 0; it < 40000 && done < 1000; ++it) {
        std::uint64_t p = ps[pick_p(rng)];
        std::uint64_t r = rs[pick_r(rng)];
        if (r == p) continue;
        unsigned f = static_cast<unsigned>(pick_f(rng));
        int fam = pick_fam(rng);

        GroupSpec T;
        try {
            switch (fam) {
                case 0: T = make_spec(Family::PSL, 2 + it % 11, p, f); break;
                case 1: T = make_spec(Family::PSU, 3 + it % 10, p, f); break;
                case 2: T = make_spec(Family::PSp, 4 + 2 * (it % 5), p, f); break;
                case 3: T = make_spec(Family::OmegaOdd, 7 + 2 * (it % 4), p, f); break;
                case 4: T = make_spec(Family::POmegaPlus, 8 + 2 * (it % 3), p, f); break;
                default: T = make_spec(Family::POmegaMinus, 8 + 2 * (it % 3), p, f); break;
            }
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (r_valuation(T, r) == 0) continue;

        BlockSystem bs = block_system(T, r);
        REQUIRE(bs.c == c_value(T, r));
        REQUIRE(bs.c * bs.s == r - 1);
        REQUIRE(bs.blocks.size() == bs.s);

        std::set<std::uint32_t> seen;
        for (const auto& b : bs.blocks) {
            REQUIRE(b.size() == bs.c);
            for (std::uint32_t x : b) {
                REQUIRE(x >= 1);
                REQUIRE(x < r);
                REQUIRE(bs.block_of[x] == bs.block_of[b[0]]);
                seen.insert(x);
            }
        }
        REQUIRE(seen.size() == r - 1);

        // multiplication by any unit permutes the blocks
        std::uniform_int_distribution<std::uint64_t> unit(1, r - 1);
        for (int t = 0; t < 4; ++t) {
            std::uint64_t u = unit(rng);
            for (const auto& b : bs.blocks) {
                std::vector<std::uint32_t> img;
                for (std::uint32_t x : b)
                    img.push_back(static_cast<std::uint32_t>(u * x % r));
                std::sort(img.begin(), img.end());
                REQUIRE(img == bs.blocks[bs.block_of[img[0]]]);
            }
        }
        ++done;
    }
    CHECK(done == 1000);
}

TEST_CASE("property: quadratic residue symbol is completely multiplicative") {
    std::mt19937 rng(161803u);
    const std::uint64_t odd_primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29,
                                        31, 37, 41, 43, 47, 53, 59, 61};
    std::uniform_int_distribution<int> pick(0, 16);
    std::uniform_int_distribution<std::int64_t> val(1, 100000);

    int checked = 0;
    for (int it = 0; it < 1500; ++it) {
        std::uint64_t p = odd_primes[pick(rng)];
        std::int64_t a = val(rng), b = val(rng);
        if (a % static_cast<std::int64_t>(p) == 0 || b % static_cast<std::int64_t>(p) == 0)
            continue;

        int la = legendre(a, p), lb = legendre(b, p);
        REQUIRE((la == 1 || la == -1));
        REQUIRE(legendre(a * b, p) == la * lb);
        REQUIRE(legendre(a + static_cast<std::int64_t>(p), p) == la);
        REQUIRE(legendre(-a, p) == legendre(-1, p) * la);

        // Euler criterion
        std::uint64_t e = pow_mod(static_cast<std::uint64_t>(a % static_cast<std::int64_t>(p)),
                                  (p - 1) / 2, p);
        REQUIRE(e == (la == 1 ? 1u : p - 1));

        REQUIRE(legendre(static_cast<std::int64_t>(p) * a, p) == 0);
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("property: bounded partition lists are complete and canonical") {
    // reference count by the include-or-skip recurrence
    constexpr unsigned N = 28, B = 32;
    static std::uint64_t ways[N + 1][B + 1];
    for (unsigned b = 0; b <= B; ++b) ways[0][b] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        ways[n][0] = 0;
        for (unsigned b = 1; b <= B; ++b)
            ways[n][b] = ways[n][b - 1] + (b <= n ? ways[n - b][b] : 0);
    }

    std::mt19937 rng(577215u);
    std::uniform_int_distribution<unsigned> pn(0, N), pb(1, B);
    for (int it = 0; it < 1000; ++it) {
        unsigned n = pn(rng), b = pb(rng);
        std::vector<Partition> parts = p_bounded_partitions(n, b);
        REQUIRE(parts.size() == ways[n][b]);

        std::set<std::vector<unsigned>> dedup;
        for (const Partition& lam : parts) {
            REQUIRE(lam.sum() == n);
            for (std::size_t i = 0; i < lam.parts.size(); ++i) {
                REQUIRE(lam.parts[i] >= 1);
                REQUIRE(lam.parts[i] <= b);
                if (i) REQUIRE(lam.parts[i] <= lam.parts[i - 1]);
            }
            if (!lam.parts.empty()) {
                unsigned g = lam.parts_gcd();
                for (unsigned x : lam.parts) REQUIRE(x % g == 0);
            }
            dedup.insert(lam.parts);
        }
        REQUIRE(dedup.size() == parts.size());
    }
}
