#include <doctest.h>

#include <elusive/decide.hpp>
#include <elusive/delperm.hpp>
#include <elusive/tables.hpp>

#include <stdexcept>

using namespace elusive;

namespace {

SubgroupCase acase(int d) {
    SubgroupCase c;
    c.kind = CaseSel::A;
    c.d = d;
    return c;
}

SubgroupCase bcase(const std::string& id) {
    SubgroupCase c;
    c.kind = CaseSel::B;
    c.id = id;
    return c;
}

SubgroupCase lowdim(const std::string& id) {
    SubgroupCase c;
    c.kind = CaseSel::Lowdim;
    c.id = id;
    return c;
}

SubgroupCase generic(const bigint& order, bool dbl = false) {
    SubgroupCase c;
    c.kind = CaseSel::GenericS;
    c.s_name = "S";
    c.s_order = order;
    c.h0_double = dbl;
    return c;
}

}  // namespace

TEST_CASE("worked example: fifteen-dimensional orthogonal group over F_19") {
    GroupSpec t = make_spec(Family::OmegaOdd, 15, 19, 1);
    Verdict v = decide_elusive(t, acase(16), 7);
    REQUIRE(v.decided);
    CHECK(v.elusive);
    CHECK(v.rule == "thm1.ii.c");

    // the class count is two, so the single-class route does not apply
    CHECK(kappa_exact_value(t, 7) == 2);
    Verdict k = decide_kappa_corollary(t, acase(16), 7);
    REQUIRE(k.decided);
    CHECK(k.elusive);
    CHECK(k.rule == "kappa.ii");

    CoverageReport cov = a_collection_coverage(16, 19, 7);
    CHECK(cov.exact);
    CHECK(cov.elusive);
    CHECK(cov.entries.size() == 2);
}

TEST_CASE("worked example: symplectic group of degree ten over F_3") {
    GroupSpec t = make_spec(Family::PSp, 10, 3, 1);
    Verdict v = decide_elusive(t, bcase("B1"), 11);
    REQUIRE(v.decided);
    CHECK(v.elusive);
    CHECK(v.rule == "thm1.iii");
    Verdict k = decide_kappa_corollary(t, bcase("B1"), 11);
    REQUIRE(k.decided);
    CHECK(k.elusive);
}

TEST_CASE("worked example: six-dimensional unitary group over F_2") {
    GroupSpec t = make_spec(Family::PSU, 6, 2, 1);
    Verdict v = decide_elusive(t, bcase("B15"), 2);
    REQUIRE(v.decided);
    CHECK(v.elusive);
    CHECK(v.rule == "thm1.iii");
    Verdict k = decide_kappa_corollary(t, bcase("B15"), 2);
    REQUIRE(k.decided);
    CHECK(k.elusive);
    CHECK(k.rule == "kappa.iii");
}

TEST_CASE("bare eigenvalue-degree test is insufficient without the block bound") {
    // degree 13 over F_3 at r = 7: c = r - 1 holds yet some class is uncovered
    GroupSpec t13 = socle_of_module(13, 3);
    CHECK(c_value(t13, 7) == 6);
    Verdict v13 = decide_elusive(t13, acase(13), 7);
    REQUIRE(v13.decided);
    CHECK(!v13.elusive);
    CHECK(!v13.witness.empty());
    CHECK(!a_collection_coverage(13, 3, 7).elusive);

    GroupSpec t20 = socle_of_module(20, 3);
    CHECK(c_value(t20, 7) == 6);
    Verdict v20 = decide_elusive(t20, acase(20), 7);
    REQUIRE(v20.decided);
    CHECK(!v20.elusive);
    CHECK(!a_collection_coverage(20, 3, 7).elusive);
}

TEST_CASE("involution branches on the permutation module") {
    // odd n: square class of (n+1)/2 decides
    GroupSpec t8 = socle_of_module(8, 3);  // Omega_7(3)
    Verdict v8 = decide_elusive(t8, acase(8), 2);
    REQUIRE(v8.decided);
    CHECK(v8.elusive);
    CHECK(v8.rule == "thm1.ii.a");

    Verdict k8 = decide_kappa_corollary(t8, acase(8), 2);
    REQUIRE(k8.decided);
    CHECK(k8.elusive == v8.elusive);
}

TEST_CASE("lowdim rows and their hypotheses") {
    GroupSpec t19 = make_spec(Family::PSL, 2, 19, 1);
    Verdict v = decide_elusive(t19, lowdim("L2-A5"), 3);
    REQUIRE(v.decided);
    CHECK(v.elusive);
    CHECK(v.rule == "thm1.i");

    // q = 11: the degree is odd, so r = 5 is out of hypothesis
    GroupSpec t11 = make_spec(Family::PSL, 2, 11, 1);
    Verdict w = decide_elusive(t11, lowdim("L2-A5"), 5);
    CHECK(!w.decided);
    CHECK(!w.degree_divisible);

    // A5 does not live in PSL2(25): the subfield copy is not in this collection
    GroupSpec t25 = make_spec(Family::PSL, 2, 5, 2);
    Verdict x = decide_elusive(t25, lowdim("L2-A5"), 5);
    CHECK(!x.decided);
    CHECK(x.note == "embedding existence conditions fail");

    // unknown ids throw rather than reject
    CHECK_THROWS_AS(decide_elusive(t19, lowdim("L9-X"), 3), std::invalid_argument);
    CHECK_THROWS_AS(decide_elusive(t19, bcase("L2-A5"), 3), std::invalid_argument);
}

TEST_CASE("doubling conditions feed the divisibility gate") {
    // U4(2) extends to U4(2).2 inside PSL4(q) exactly when q = e mod 4
    GroupSpec t13 = make_spec(Family::PSL, 4, 13, 1);
    CHECK(h0_order(t13, lowdim("L4-U42")) == 2 * 25920);
    GroupSpec t7 = make_spec(Family::PSL, 4, 7, 1);
    CHECK(h0_order(t7, lowdim("L4-U42")) == 25920);

    GroupSpec psp = make_spec(Family::PSp, 10, 7, 1);
    CHECK(h0_order(psp, bcase("B1")) == 2 * 13685760);  // 7 = -1 mod 8
    GroupSpec psp3 = make_spec(Family::PSp, 10, 3, 1);
    CHECK(h0_order(psp3, bcase("B1")) == 13685760);

    // the alternating-vs-symmetric distinction for permutation modules
    GroupSpec o7 = socle_of_module(8, 3);
    CHECK(h0_order(o7, acase(8)) == factorial(8));
    GroupSpec o15 = socle_of_module(16, 19);
    CHECK(h0_order(o15, acase(16)) == alternating_order(16));
}

TEST_CASE("generic stabilisers decide through the screening conditions") {
    // 5^2 divides 7^4 - 1, so a stabiliser of order exactly divisible by 5
    // leaves a factor of 5 in the degree while c = 4 > n/2
    GroupSpec t = make_spec(Family::PSL, 6, 7, 1);
    REQUIRE(r_valuation(t, 5) == 2);
    Verdict v = decide_elusive(t, generic(bigint(5)), 5);
    REQUIRE(v.decided);
    CHECK(v.elusive);
    CHECK(v.rule == "thm1.iv");

    // bumping the stabiliser order kills the divisibility hypothesis
    Verdict w = decide_elusive(t, generic(bigint(25)), 5);
    CHECK(!w.decided);
    CHECK(w.note == "r does not divide the degree");

    // small dimension is rejected outright
    GroupSpec small = make_spec(Family::PSL, 4, 7, 1);
    Verdict rej = decide_elusive(small, generic(bigint(60)), 3);
    CHECK(!rej.decided);

    CHECK_THROWS_AS(decide_elusive(t, generic(bigint(0)), 5), std::invalid_argument);
}

TEST_CASE("screening conditions") {
    GroupSpec t = make_spec(Family::PSL, 8, 3, 1);
    CHECK(conditions_diamond(t, 41));      // c = 8, 4c^2 > 8
    CHECK(!conditions_box(t, 41));         // 2c = 16 > n
    CHECK(conditions_star(t, generic(bigint(41)), 41));
    CHECK(!conditions_star(t, generic(bigint(40)), 41));  // r must divide |H0|
    CHECK(!conditions_star(t, generic(bigint(6)), 3));    // r = p
    // c = 5 with n = 8: 2c > n holds
    CHECK(phi_rq(11, 3) == 5);
    CHECK(conditions_star(t, generic(bigint(11)), 11));
}

TEST_CASE("subfield corollary clauses") {
    // index-k subfield, k odd prime: r = k is always elusive
    CHECK(decide_subfield_corollary(6, 2, 2, 3, 1, 3, false));
    // r = p with no constraining partition gcds
    CHECK(decide_subfield_corollary(6, 2, 2, 3, 1, 2, false));
    // other primes are never elusive here
    CHECK(!decide_subfield_corollary(6, 2, 2, 3, 1, 5, false));

    // unitary index-two clause on an odd-dimensional space
    CHECK(decide_subfield_corollary(7, 7, 7, 2, -1, 7, true));
    CHECK(!decide_subfield_corollary(7, 11, 1331, 2, -1, 11, true));
    CHECK(!decide_subfield_corollary(7, 7, 7, 2, -1, 3, true));
    CHECK_THROWS_AS(decide_subfield_corollary(6, 7, 7, 2, -1, 7, true), std::invalid_argument);
    CHECK_THROWS_AS(decide_subfield_corollary(7, 7, 49, 4, -1, 7, false), std::invalid_argument);
    CHECK_THROWS_AS(decide_subfield_corollary(7, 7, 6, 3, -1, 7, false), std::invalid_argument);
}

TEST_CASE("coverage rejects parameters outside the collection") {
    CHECK_THROWS_AS(a_collection_coverage(8, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(a_collection_coverage(4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(a_collection_coverage(16, 19, 17), std::invalid_argument);
    CHECK_NOTHROW(a_collection_coverage(16, 19, 13));
}

TEST_CASE("kappa summary values") {
    CHECK(kappa_exact_value(make_spec(Family::PSL, 2, 11, 1), 5) == 1);
    CHECK(kappa_exact_value(make_spec(Family::PSL, 2, 13, 1), 7) == 1);
    CHECK(kappa_exact_value(make_spec(Family::PSL, 2, 13, 1), 11) == std::nullopt);
    CHECK(kappa_known_lower(make_spec(Family::PSL, 2, 13, 1), 11) == 0);
    CHECK(kappa_known_lower(make_spec(Family::OmegaOdd, 15, 19, 1), 7) == 2);
}
