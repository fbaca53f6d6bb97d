#include <doctest.h>

#include <elusive/linalg.hpp>
#include <elusive/oracle.hpp>

using namespace elusive;

TEST_CASE("modular matrix basics") {
    CHECK(inv_mod(3, 7) == 5);
    CHECK(inv_mod(1, 2) == 1);

    Mat a(2, 2);
    a << 1, 2, 3, 4;
    Mat b = mat_mod(a * 3, 5);
    CHECK(b(0, 0) == 3);
    CHECK(b(1, 1) == 2);

    Mat id = Mat::Identity(3, 3);
    Mat m(3, 3);
    m << 2, 1, 0, 0, 2, 1, 0, 0, 2;
    Mat mi = mat_inv_mod(m, 5);
    CHECK(mat_mul_mod(m, mi, 5) == id);
    CHECK(mat_pow_mod(m, 0, 5) == id);

    // rank over F_2 differs from rational rank
    Mat r(2, 2);
    r << 1, 1, 1, 3;
    CHECK(rank_mod(r, 2) == 1);
    CHECK(rank_mod(r, 5) == 2);

    Vec rhs(2);
    rhs << 0, 2;
    Vec x;
    REQUIRE(solve_mod(r, rhs, 5, x));
    Vec back = mat_mod(r * x, 5);
    CHECK(back == rhs);
    Vec bad(2);
    bad << 1, 0;
    CHECK(!solve_mod(r, bad, 2, x));
}

TEST_CASE("jordan_partition recovers block structure") {
    // J3 + J1 at eigenvalue 1 over F_5
    Mat m = Mat::Identity(4, 4);
    m(0, 1) = 1;
    m(1, 2) = 1;
    Partition lam = jordan_partition(m, 5);
    CHECK(lam.parts == std::vector<unsigned>{3, 1});

    // p bounds the block size of an order-p element: (I + N)^p = I needs blocks <= p
    Mat u = Mat::Identity(3, 3);
    u(0, 1) = 1;
    u(1, 2) = 1;
    Mat up = mat_pow_mod(u, 3, 3);
    CHECK(up == Mat::Identity(3, 3));
    CHECK(jordan_partition(u, 3).parts == std::vector<unsigned>{3});

    CHECK(jordan_partition(Mat::Identity(2, 2), 7).parts == std::vector<unsigned>{1, 1});
}

TEST_CASE("quadratic form classification, odd characteristic") {
    Mat hyp(2, 2);
    hyp << 0, 1, 1, 0;
    CHECK(classify_quadratic_form(hyp, 5) == FormType::Plus);
    CHECK(classify_quadratic_form(hyp, 7) == FormType::Plus);

    // x^2 + y^2: minus type exactly when -1 is a nonsquare
    Mat diag2 = Mat::Identity(2, 2);
    CHECK(classify_quadratic_form(diag2, 7) == FormType::Minus);   // (-1/7) = -1
    CHECK(classify_quadratic_form(diag2, 13) == FormType::Plus);   // (-1/13) = 1

    CHECK(classify_quadratic_form(Mat::Identity(3, 3), 5) == FormType::Odd);

    Mat deg(2, 2);
    deg << 1, 0, 0, 0;
    CHECK(classify_quadratic_form(deg, 3) == FormType::Degenerate);
}

TEST_CASE("quadratic form classification, characteristic two") {
    Mat polar(2, 2);
    polar << 0, 1, 1, 0;
    // xy: two singular points away from 0 -> hyperbolic
    CHECK(classify_quadratic_form2({0, 0}, polar) == FormType::Plus);
    // x^2 + xy + y^2 is irreducible over F_2 -> elliptic
    CHECK(classify_quadratic_form2({1, 1}, polar) == FormType::Minus);

    Mat zero2 = Mat::Zero(2, 2);
    CHECK(classify_quadratic_form2({0, 0}, zero2) == FormType::Degenerate);
}

TEST_CASE("restrict_bilinear and eigenspace_dim") {
    Mat b = Mat::Identity(3, 3);
    Mat basis(3, 2);
    basis << 1, 0, 0, 1, 0, 0;
    Mat res = restrict_bilinear(b, basis, 5);
    CHECK(res == Mat::Identity(2, 2));

    Field f4 = make_field(2, 2);
    // multiplication by a generator of F_4 acting on F_2^2 has eigenvalues
    // the two primitive cube roots of unity over F_4
    Mat comp(2, 2);
    comp << 0, 1, 1, 1;  // companion of x^2 + x + 1
    std::uint64_t w = element_of_order(f4, 3);
    CHECK(eigenspace_dim(comp, f4, w) == 1);
    CHECK(eigenspace_dim(comp, f4, f4.mul(w, w)) == 1);
    CHECK(eigenspace_dim(comp, f4, 1) == 0);
}

TEST_CASE("field arithmetic") {
    Field f9 = make_field(3, 2);
    CHECK(f9.q == 9);
    for (std::uint64_t a = 1; a < 9; ++a) {
        CHECK(f9.mul(a, f9.inv(a)) == 1);
        CHECK(f9.add(a, f9.neg(a)) == 0);
    }
    std::uint64_t g = element_of_order(f9, 8);
    CHECK(field_element_order(f9, g) == 8);
    CHECK(field_element_order(f9, f9.mul(g, g)) == 4);
    // frobenius fixes exactly the prime subfield
    int fixed = 0;
    for (std::uint64_t a = 0; a < 9; ++a) fixed += f9.frobenius(a) == a;
    CHECK(fixed == 3);
}

TEST_CASE("closure enumeration of SL2(5)") {
    Field f5 = make_field(5, 1);
    auto gens = sl_generators(f5, 2);
    Closure lin = small_group_closure(f5, gens, false);
    CHECK(lin.size() == 120);
    Closure proj = small_group_closure(f5, gens, true);
    CHECK(proj.size() == 60);

    // class census of A5: 1+15+20+12+12
    CHECK(classes_of_order(proj, 2).size() == 1);
    CHECK(classes_of_order(proj, 3).size() == 1);
    CHECK(classes_of_order(proj, 5).size() == 2);
    std::size_t n2 = classes_of_order(proj, 2)[0].size();
    CHECK(n2 == 15);

    // element orders multiply out
    for (std::uint32_t id = 0; id < 10; ++id) {
        std::uint64_t o = element_order(proj, id);
        CHECK(o >= 1);
        std::uint32_t acc = 0;  // identity id
        // o-fold product of the element with itself is the identity
        std::uint32_t cur = proj.id_of(fq_identity(2));
        for (std::uint64_t k = 0; k < o; ++k) cur = proj.mul(cur, id);
        CHECK(cur == proj.id_of(fq_identity(2)));
        (void)acc;
    }
}

TEST_CASE("derangement search matches naive containment") {
    Field f5 = make_field(5, 1);
    Closure proj = small_group_closure(f5, sl_generators(f5, 2), true);
    // h0 = a Sylow 5-normaliser: the upper triangular subgroup, order 10
    std::vector<std::uint32_t> tri;
    for (std::uint32_t id = 0; id < proj.size(); ++id) {
        FqMat m = proj.mat(id);
        if (m.at(1, 0) == 0) tri.push_back(id);
    }
    REQUIRE(tri.size() == 10);
    DerangementReport rep = derangement_search(proj, tri, 2);
    // involutions of A5 all lie in a point stabiliser of the degree-6 action
    CHECK(rep.classes_total == 1);
    CHECK(rep.derangement_reps.empty());
    DerangementReport rep3 = derangement_search(proj, tri, 3);
    CHECK(rep3.classes_total == 1);
    CHECK(rep3.derangement_reps.size() == 1);  // order 3 never fixes a point on 6
}
