#include <doctest.h>

#include <elusive/condexpr.hpp>

#include <stdexcept>

using namespace elusive;

namespace {

CondEnv env_q(long long q, int eps = 1) {
    CondEnv e;
    e.q = q;
    e.eps = eps;
    return e;
}

}  // namespace

TEST_CASE("congruence atoms") {
    CHECK(eval_condition("q^2 = -1 (25)", env_q(7)));       // 49 = -1 mod 25
    CHECK(!eval_condition("q^2 = -1 (25)", env_q(11)));     // 121 = 21 mod 25
    CHECK(eval_condition("q = +-1 (8)", env_q(31)));        // 31 = -1 mod 8
    CHECK(eval_condition("q = +-1 (8)", env_q(41)));
    CHECK(!eval_condition("q = +-1 (8)", env_q(11)));
    CHECK(eval_condition("q != e (11) & q^5 = e (121)", env_q(3)));  // 3^5 = 243 = 2*121 + 1
    CHECK(!eval_condition("q != e (11) & q^5 = e (121)", env_q(12)));  // 12 = 1 mod 11
}

TEST_CASE("eps scaling of constants") {
    CondEnv plus = env_q(13, 1);
    CondEnv minus = env_q(13, -1);
    CHECK(eval_condition("q = 5e (8)", plus));    // 13 = 5 mod 8
    CHECK(!eval_condition("q = 5e (8)", minus));  // want -5 = 3 mod 8
    CHECK(eval_condition("q = 5e (8)", env_q(11, -1)));  // 11 = 3 mod 8
    // bare e
    CHECK(eval_condition("q = e (4)", env_q(13, 1)));
    CHECK(eval_condition("q = e (4)", env_q(11, -1)));
    CHECK(!eval_condition("q = e (4)", env_q(11, 1)));
}

TEST_CASE("exact-equality modulus zero") {
    CHECK(eval_condition("q = 7 (0)", env_q(7)));
    CHECK(!eval_condition("q = 7 (0)", env_q(49)));
    CHECK(eval_condition("q = -5e (0)", env_q(5, -1)));
    CHECK(!eval_condition("q = -5e (0)", env_q(5, 1)));
    CHECK(eval_condition("q != -5e (0)", env_q(4, 1)));
}

TEST_CASE("boolean structure") {
    CondEnv e = env_q(19);
    e.p = 19;
    e.f = 1;
    CHECK(eval_condition("true", e));
    CHECK(eval_condition("f = 1 (0) & p = +-1 (10)", e));
    CHECK(eval_condition("f = 2 (0) & p = +-3 (10) | f = 1 (0) & p = +-1 (10)", e));
    CHECK(!eval_condition("f = 2 (0) & p = +-3 (10)", e));
    // & binds tighter than |
    CondEnv e2 = env_q(4);
    e2.f = 2;
    e2.p = 2;
    CHECK(eval_condition("f = 1 (0) & p = e (15) | q = 4e (0)", e2));
}

TEST_CASE("legendre atoms and guarded short-circuit") {
    CondEnv e;
    e.p = 3;
    e.n = 7;
    CHECK(eval_condition("legendre((n+1)/2,p) = 1", e));  // (4/3) = 1
    e.p = 19;
    e.n = 15;
    CHECK(eval_condition("legendre((n+1)/2,p) = -1", e));  // (8/19) = -1
    // a false guard must suppress evaluation of the legendre atom entirely
    e.p = 2;
    CHECK(!eval_condition("p != 2 (0) & legendre((n+1)/2,p) = 1", e));
    // a true first alternative must suppress the rest of the disjunction
    e.p = 2;
    e.q = 2;
    CHECK(eval_condition("p = 2 (0) | legendre(q,p) = 1", e));
}

TEST_CASE("negated congruences and powers") {
    CondEnv e3;
    e3.p = 3;
    CHECK(eval_condition("p^2 != 1 (11) & p^5 = +-1 (121)", e3));
    CondEnv e10;
    e10.p = 10;  // 100 = 1 mod 11
    CHECK(!eval_condition("p^2 != 1 (11) & p^5 = +-1 (121)", e10));
    CHECK(eval_condition("q^3 = e (49) & q != e (7)", env_q(18)));  // 18^3 = 5832 = 119*49 + 1
    CHECK(!eval_condition("q^3 = e (49) & q != e (7)", env_q(8)));  // 8 = 1 mod 7
}

TEST_CASE("syntax validation") {
    CHECK_NOTHROW(check_condition_syntax("q = +-1 (8)"));
    CHECK_NOTHROW(check_condition_syntax("true"));
    CHECK_NOTHROW(check_condition_syntax("legendre((n+1)/2,p) = 1"));
    CHECK_THROWS_AS(check_condition_syntax("q = "), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_syntax("z = 1 (5)"), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_syntax("q = 1 (5) &"), std::invalid_argument);
    CHECK_THROWS_AS(check_condition_syntax("q == 1 (5)"), std::invalid_argument);
}
