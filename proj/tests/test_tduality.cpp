#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mirrorcalc/tduality.hpp"

using namespace mirrorcalc;
using namespace mirrorcalc::tor;

namespace {

Sublattice span_of(int n, std::initializer_list<std::initializer_list<Int>> rows) {
    IMat m(static_cast<int>(rows.size()), n);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return lat::make_sublattice(lat::standard_zn(n), m);
}

Sublattice full_lattice(int n) { return Sublattice{lat::standard_zn(n), IMat::identity(n)}; }

Sublattice zero_lattice(int n) { return Sublattice{lat::standard_zn(n), IMat(0, n)}; }

bool same_sublattice(const Sublattice& a, const Sublattice& b) {
    return a.ambient.rank == b.ambient.rank && a.basis == b.basis;
}

// Every functional in the annihilator kills every generator.
bool pairing_vanishes(const Sublattice& s, const Sublattice& ann) {
    for (int i = 0; i < ann.rank(); ++i)
        for (int k = 0; k < s.rank(); ++k) {
            Int acc(0);
            for (int j = 0; j < s.ambient.rank; ++j) acc += ann.basis(i, j) * s.basis(k, j);
            if (acc != 0) return false;
        }
    return true;
}

Sublattice random_saturated(std::mt19937& rng, int n, int r) {
    std::uniform_int_distribution<int> entry(-4, 4);
    for (;;) {
        IMat m(r, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
        HnfResult h = hermite_normal_form(m);
        if (h.rank != r) continue;
        IMat rows(r, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) rows(i, j) = h.h(i, j);
        return lat::saturate(lat::make_sublattice(lat::standard_zn(n), rows));
    }
}

PureCycle cycle(int n, Sublattice fiber, Int mult = 1) {
    PureCycle w;
    w.n = n;
    w.base_dim = n - fiber.rank();
    w.fiber_lattice = std::move(fiber);
    w.multiplicity = std::move(mult);
    return w;
}

} // namespace

TEST_CASE("annihilator of a slanted plane in Z^3") {
    Sublattice s = span_of(3, {{2, 1, 0}, {0, 0, 1}});
    REQUIRE(lat::is_saturated(s));
    Sublattice ann = annihilator(s);
    REQUIRE(ann.rank() == 1);
    REQUIRE(ann.basis(0, 0) == 1);
    REQUIRE(ann.basis(0, 1) == -2);
    REQUIRE(ann.basis(0, 2) == 0);
    REQUIRE(pairing_vanishes(s, ann));
}

TEST_CASE("annihilator at the extremes") {
    SECTION("full lattice has trivial annihilator") {
        Sublattice ann = annihilator(full_lattice(4));
        REQUIRE(ann.rank() == 0);
        REQUIRE(ann.basis.rows() == 0);
        REQUIRE(ann.basis.cols() == 4);
    }
    SECTION("zero lattice is annihilated by everything") {
        Sublattice ann = annihilator(zero_lattice(4));
        REQUIRE(ann.rank() == 4);
        REQUIRE(ann.basis == IMat::identity(4));
    }
}

TEST_CASE("annihilator refuses non-saturated input") {
    Sublattice s = span_of(2, {{2, 0}, {0, 1}});
    REQUIRE_FALSE(lat::is_saturated(s));
    REQUIRE_THROWS_AS(annihilator(s), std::invalid_argument);
    REQUIRE(annihilator(lat::saturate(s)).rank() == 0);
}

TEST_CASE("rank complementarity and double duality on random saturated sublattices") {
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int n = dim(rng);
        int r = std::uniform_int_distribution<int>(0, n)(rng);
        Sublattice s = random_saturated(rng, n, r);
        Sublattice ann = annihilator(s);
        REQUIRE(ann.rank() == n - r);
        REQUIRE(lat::is_saturated(ann));
        REQUIRE(pairing_vanishes(s, ann));
        REQUIRE(same_sublattice(double_dual(s), s));
    }
}

TEST_CASE("annihilator swaps sums and intersections") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dim(2, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = dim(rng);
        std::uniform_int_distribution<int> rk(0, n);
        Sublattice s1 = random_saturated(rng, n, rk(rng));
        Sublattice s2 = random_saturated(rng, n, rk(rng));
        Sublattice sum = lat::saturate(lat::sum_sublattices(s1, s2));
        Sublattice lhs = annihilator(sum);
        Sublattice rhs = lat::intersect_sublattices(annihilator(s1), annihilator(s2));
        REQUIRE(same_sublattice(lhs, rhs));
    }
}

TEST_CASE("sublattice sum and intersection basics") {
    Sublattice a = span_of(2, {{1, 1}});
    Sublattice b = span_of(2, {{1, -1}});
    Sublattice sum = lat::sum_sublattices(a, b);
    REQUIRE(sum.rank() == 2);
    REQUIRE_FALSE(lat::is_saturated(sum)); // index two: (0,1) is missing
    REQUIRE(lat::saturate(sum).basis == IMat::identity(2));
    REQUIRE(lat::intersect_sublattices(a, b).rank() == 0);

    Sublattice c = span_of(2, {{2, 0}});
    Sublattice d = span_of(2, {{1, 0}});
    Sublattice meet = lat::intersect_sublattices(c, d);
    REQUIRE(meet.rank() == 1);
    REQUIRE(meet.basis(0, 0) == 2);
    REQUIRE(meet.basis(0, 1) == 0);
}

TEST_CASE("pure cycle validation") {
    PureCycle fiber = cycle(3, full_lattice(3));
    REQUIRE_NOTHROW(fiber.validate());

    PureCycle bad = fiber;
    bad.base_dim = 1; // rank 3 + base 1 != 3
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = fiber;
    bad.multiplicity = 0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = fiber;
    bad.n = 0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);

    PureCycle skew;
    skew.n = 2;
    skew.fiber_lattice = span_of(2, {{2, 0}});
    skew.base_dim = 1;
    REQUIRE_THROWS_AS(skew.validate(), std::invalid_argument); // not saturated

    PureCycle wrong_gram;
    wrong_gram.n = 2;
    wrong_gram.fiber_lattice = Sublattice{lat::lattice_U(), IMat::identity(2)};
    wrong_gram.base_dim = 0;
    REQUIRE_THROWS_AS(wrong_gram.validate(), std::invalid_argument);
}

TEST_CASE("dual class validation ties degree to support rank") {
    DualClass d;
    d.dual_lattice = span_of(3, {{1, 0, 0}});
    d.degree = 2;
    REQUIRE_NOTHROW(d.validate());
    d.degree = 4;
    REQUIRE_THROWS_AS(d.validate(), std::invalid_argument);
    d.degree = 2;
    d.rank_hint = 0;
    REQUIRE_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("duality anchors: fiber, section, multisection") {
    const int n = 3;

    PureCycle fiber = cycle(n, full_lattice(n));
    DualClass df = t_dual_cycle(fiber);
    REQUIRE(df.degree == 0);
    REQUIRE(df.dual_lattice.rank() == 0);
    REQUIRE(df.rank_hint == 1);
    REQUIRE(leray_level(fiber) == 0);

    PureCycle section = cycle(n, zero_lattice(n));
    DualClass ds = t_dual_cycle(section);
    REQUIRE(ds.degree == 2 * n);
    REQUIRE(ds.dual_lattice.rank() == n);
    REQUIRE(leray_level(section) == n);

    PureCycle trisection = cycle(n, zero_lattice(n), Int(3));
    DualClass dt = t_dual_cycle(trisection);
    REQUIRE(dt.degree == 2 * n);
    REQUIRE(dt.rank_hint == 3);
}

TEST_CASE("duality degree formula on random cycles") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        int r = std::uniform_int_distribution<int>(0, n)(rng);
        PureCycle w = cycle(n, random_saturated(rng, n, r),
                            Int(std::uniform_int_distribution<int>(1, 5)(rng)));
        DualClass d = t_dual_cycle(w);
        REQUIRE(d.degree == 2 * (n - r));
        REQUIRE(d.degree == 2 * leray_level(w));
        REQUIRE(d.dual_lattice.rank() == n - r);
        REQUIRE(pairing_vanishes(w.fiber_lattice, d.dual_lattice));
        REQUIRE(d.rank_hint == w.multiplicity);
    }
}

TEST_CASE("leray level is monotone under fiber inclusion") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        int r = std::uniform_int_distribution<int>(1, n)(rng);
        Sublattice big = random_saturated(rng, n, r);
        // a sub-span of a saturated basis stays saturated
        int keep = std::uniform_int_distribution<int>(0, r - 1)(rng);
        IMat rows(keep, n);
        for (int i = 0; i < keep; ++i)
            for (int j = 0; j < n; ++j) rows(i, j) = big.basis(i, j);
        Sublattice small = lat::make_sublattice(lat::standard_zn(n), rows);
        REQUIRE(lat::is_saturated(small));
        REQUIRE(leray_level(cycle(n, big)) <= leray_level(cycle(n, small)));
    }
}

TEST_CASE("leray filtration check") {
    const int n = 3;
    PureCycle fiber = cycle(n, full_lattice(n));
    PureCycle section = cycle(n, zero_lattice(n));

    DualClass degree0 = t_dual_cycle(fiber);
    DualClass degree2n = t_dual_cycle(section);

    REQUIRE(leray_filtration_check({fiber}, {degree0}));
    REQUIRE(leray_filtration_check({section}, {degree2n}));
    REQUIRE_FALSE(leray_filtration_check({fiber}, {degree2n}));
    REQUIRE(leray_filtration_check({fiber, section}, {degree0, degree2n}));
    REQUIRE_FALSE(leray_filtration_check({section, fiber}, {degree2n, degree2n}));

    REQUIRE_THROWS_AS(leray_filtration_check({fiber}, {degree0, degree2n}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(leray_filtration_check({fiber, section}, {degree0}),
                      std::invalid_argument);
}

TEST_CASE("mid-level duality example: one-dimensional fiber in T^3") {
    // fiber direction (1,2,3): level two, dual supported on its annihilator plane
    Sublattice line = span_of(3, {{1, 2, 3}});
    REQUIRE(lat::is_saturated(line));
    PureCycle w = cycle(3, line, Int(2));
    REQUIRE(leray_level(w) == 2);
    DualClass d = t_dual_cycle(w);
    REQUIRE(d.degree == 4);
    REQUIRE(d.dual_lattice.rank() == 2);
    REQUIRE(d.rank_hint == 2);
    REQUIRE(pairing_vanishes(line, d.dual_lattice));
    REQUIRE(same_sublattice(annihilator(d.dual_lattice), line));
    REQUIRE(leray_filtration_check({w}, {d}));
}
