#include <doctest.h>

#include <elusive/classes.hpp>
#include <elusive/oracle.hpp>

#include <set>

using namespace elusive;

namespace {

GroupSpec spec(Family fam, std::uint32_t n, std::uint64_t p, std::uint32_t f = 1) {
    return make_spec(fam, n, p, f);
}

}  // namespace

TEST_CASE("root orbits under the field automorphism") {
    FrobeniusOrbitSystem sys = root_orbits(7, 13);  // 13 = 6 = -1 mod 7
    CHECK(sys.orbits.size() == 3);
    CHECK(sys.orbits[0] == std::vector<std::uint32_t>{1, 6});
    CHECK(sys.orbits[1] == std::vector<std::uint32_t>{2, 5});
    CHECK(sys.orbits[2] == std::vector<std::uint32_t>{3, 4});
    CHECK(sys.orbit_of[3] == 2);

    FrobeniusOrbitSystem one = root_orbits(5, 11);  // 11 = 1 mod 5: all singletons
    CHECK(one.orbits.size() == 4);
}

TEST_CASE("eigenvalue pairing blocks") {
    BlockSystem b = block_system(spec(Family::PSL, 2, 13), 7);
    CHECK(b.c == 2);
    CHECK(b.s == 3);
    CHECK(b.blocks[0] == std::vector<std::uint32_t>{1, 6});

    BlockSystem u = block_system(spec(Family::PSU, 4, 2), 5);
    CHECK(u.c == 4);
    CHECK(u.s == 1);
    CHECK(u.blocks[0] == std::vector<std::uint32_t>{1, 2, 3, 4});

    BlockSystem sp = block_system(spec(Family::PSp, 10, 3), 11);
    CHECK(sp.c == 10);
    CHECK(sp.s == 1);
}

TEST_CASE("semisimple class counts match the closure oracle") {
    // PSL2(q), odd r != p dividing the order
    struct Row {
        std::uint64_t q;
        std::uint64_t r;
    };
    for (Row row : {Row{5, 5}, Row{7, 3}, Row{7, 7}, Row{11, 5}, Row{13, 3}, Row{13, 7}}) {
        Field f = make_field(static_cast<std::uint32_t>(row.q), 1);
        Closure c = small_group_closure(f, sl_generators(f, 2), true);
        GroupSpec t = spec(Family::PSL, 2, row.q);
        EnumReport rep = enumerate_element_classes(t, row.r);
        CHECK(rep.exact);
        CHECK(rep.class_count == classes_of_order(c, row.r).size());
    }
}

TEST_CASE("frozen class counts") {
    CHECK(enumerate_element_classes(spec(Family::PSU, 4, 2), 3).class_count == 4);
    CHECK(enumerate_element_classes(spec(Family::PSL, 2, 11), 5).class_count == 2);
    CHECK(enumerate_element_classes(spec(Family::PSL, 3, 7), 3).class_count == 1);
    CHECK(enumerate_element_classes(spec(Family::PSL, 5, 7), 3).class_count == 6);
    CHECK(enumerate_element_classes(spec(Family::PSL, 2, 13), 3).class_count == 1);
    CHECK(enumerate_element_classes(spec(Family::PSU, 6, 2), 3).class_count == 3);
}

TEST_CASE("unipotent catalogue against the closure oracle") {
    // r = p: PSL3(3) has the full and subregular Jordan shapes
    Field f3 = make_field(3, 1);
    Closure c3 = small_group_closure(f3, sl_generators(f3, 3), true);
    CHECK(c3.size() == 5616);
    EnumReport rep = enumerate_element_classes(spec(Family::PSL, 3, 3), 3);
    CHECK(rep.exact);
    CHECK(rep.class_count == classes_of_order(c3, 3).size());

    // PSL3(2): involutions are transvections, a single class
    Field f2 = make_field(2, 1);
    Closure c2 = small_group_closure(f2, sl_generators(f2, 3), true);
    EnumReport rep2 = enumerate_element_classes(spec(Family::PSL, 3, 2), 2);
    CHECK(rep2.exact);
    CHECK(rep2.class_count == 1);
    CHECK(classes_of_order(c2, 2).size() == 1);
}

TEST_CASE("involution catalogue in odd characteristic") {
    // PSp4(3) via the closure of the standard generators
    Field f3 = make_field(3, 1);
    Closure sp = small_group_closure(f3, sp_generators(f3, 4), true);
    CHECK(sp.size() == 25920);
    EnumReport rep = enumerate_element_classes(spec(Family::PSp, 4, 3), 2);
    CHECK(rep.exact);
    CHECK(rep.class_count == classes_of_order(sp, 2).size());

    EnumReport l2 = enumerate_element_classes(spec(Family::PSL, 2, 13), 2);
    CHECK(l2.exact);
    CHECK(l2.class_count == 1);
}

TEST_CASE("subgroup classes fuse element classes along power maps") {
    // PSL2(11), r = 5: two element classes, one subgroup class
    SubgroupReport sub = enumerate_subgroup_classes(spec(Family::PSL, 2, 11), 5);
    CHECK(sub.exact);
    CHECK(sub.count == 1);
    REQUIRE(sub.orbits.size() == 1);
    CHECK(sub.orbits[0].size() == 2);

    // PSL2(13), r = 7: three element classes, one subgroup class
    SubgroupReport s7 = enumerate_subgroup_classes(spec(Family::PSL, 2, 13), 7);
    CHECK(s7.count == 1);

    // inert case: c = r - 1 keeps classes apart only through the fixed space
    SubgroupReport w = enumerate_subgroup_classes(spec(Family::OmegaOdd, 15, 19), 7);
    CHECK(w.exact);
    CHECK(w.count == 2);
}

TEST_CASE("semisimple labels carry consistent block data") {
    EnumReport rep = enumerate_element_classes(spec(Family::OmegaOdd, 15, 19), 7);
    CHECK(rep.exact);
    REQUIRE(rep.class_count == 2);
    for (const ClassLabel& lab : rep.labels) {
        CHECK(lab.kind == LabelKind::Semisimple);
        std::uint32_t tot = 0;
        for (std::uint32_t m : lab.block_mult) tot += m;
        // 6-dimensional eigenvalue blocks inside a 15-dim space
        CHECK(lab.fixed_dim + 6 * tot == 15);
    }
}

TEST_CASE("split-torus labels are canonical rotations") {
    // PSL2(11), r = 5, c = 1: eigenvalue multisets up to rotation and inversion
    EnumReport rep = enumerate_element_classes(spec(Family::PSL, 2, 11), 5);
    std::set<std::string> seen;
    for (const ClassLabel& lab : rep.labels) {
        CHECK(lab.kind == LabelKind::SemisimpleSplit);
        CHECK(seen.insert(lab.to_string()).second);  // all labels distinct
    }
}

TEST_CASE("nu and the small-support witness") {
    GroupSpec big = spec(Family::PSL, 20, 3);
    auto w2 = guralnick_saxl_witness(big, 2);
    REQUIRE(w2.has_value());
    CHECK(w2->kind == LabelKind::Involution);
    CHECK(nu_of_label(big, *w2) == 2);

    auto wp = guralnick_saxl_witness(big, 3);
    REQUIRE(wp.has_value());
    CHECK(wp->kind == LabelKind::Unipotent);
    CHECK(nu_of_label(big, *wp) == 2);

    // an eigenvalue field of degree 6 forces support beyond the generic bound
    CHECK(!guralnick_saxl_witness(big, 7).has_value());

    // split torus element with two moved eigenvalues
    GroupSpec sev = spec(Family::PSL, 20, 7);
    auto ws = guralnick_saxl_witness(sev, 3);
    REQUIRE(ws.has_value());
    CHECK(nu_of_label(sev, *ws) <= 2);

    EnumReport rep = enumerate_element_classes(spec(Family::PSL, 2, 13), 7);
    for (const ClassLabel& lab : rep.labels) {
        CHECK(nu_of_label(spec(Family::PSL, 2, 13), lab) == 1);
    }
}
