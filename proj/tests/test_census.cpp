#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rotlab/census.hpp"
#include "rotlab/generators.hpp"
#include "rotlab/io.hpp"

using namespace rotlab;
using rotlab_test::quadruple_oracle;

namespace {
PlanarPoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

PointSet unit_square() { return grid(2, 2); }
}

TEST_CASE("distance classes of the unit square") {
    const DistanceClasses dc = distance_classes(unit_square());
    CHECK(dc.count() == 2);
    CHECK(dc.classes().at(Rational(1)).size() == 8);
    CHECK(dc.classes().at(Rational(2)).size() == 4);
}

TEST_CASE("distance classes of trivial and grid sets") {
    CHECK(distance_classes(PointSet({pt(3, 9)})).count() == 0);
    const DistanceClasses dc = distance_classes(grid(3, 3));
    CHECK(dc.count() == 5); // 1, 2, 4, 5, 8
    for (const auto& [d, pairs] : dc.classes())
        CHECK(pairs.size() % 2 == 0);
}

TEST_CASE("k_size") {
    CHECK(k_size(PointSet({pt(0, 0), pt(1, 0)})) == 2);
    CHECK(k_size(unit_square()) == 68);
    CHECK(k_size(PointSet({pt(0, 0), pt(1, 0), pt(2, 0)})) == 14);
}

TEST_CASE("census of a two-point set") {
    const PointSet s({pt(0, 0), pt(1, 0)});
    const RotationCensus census = rotation_census(s);
    REQUIRE(census.entries().size() == 1);
    const CensusEntry& e = census.entries()[0];
    CHECK(e.rotation.p() == pt(-1, 0));
    CHECK(e.rotation.q() == pt(1, 0));
    CHECK(e.multiplicity == 2);
    CHECK(e.chart_excluded);
    CHECK(e.classification == MotionClass::Low);
}

TEST_CASE("census of the unit square matches the quadruple oracle") {
    const PointSet s = unit_square();
    const RotationCensus census = rotation_census(s);
    const auto oracle = quadruple_oracle(s);

    REQUIRE(census.entries().size() == oracle.size());
    long long n4 = 0, n2 = 0, total = 0;
    for (const auto& e : census.entries()) {
        REQUIRE(oracle.at(e.rotation) == e.quadruple_count);
        if (e.multiplicity == 4) ++n4;
        if (e.multiplicity == 2) ++n2;
        total += e.multiplicity * (e.multiplicity - 1);
    }
    CHECK(n4 == 3);
    CHECK(n2 == 16);
    CHECK(total == 68);
}

TEST_CASE("translation by (0,1) in the 3x3 grid") {
    const PointSet s = grid(3, 3);
    const RotationCensus census = rotation_census(s);
    const Rotation shift(pt(1, 0), pt(0, 1));
    const CensusEntry* e = census.find(shift);
    REQUIRE(e != nullptr);
    CHECK(e->multiplicity == 6);
    CHECK(e->classification == MotionClass::Joint);
}

TEST_CASE("multiplicity by direct application") {
    const PointSet row3({pt(0, 0), pt(1, 0), pt(2, 0)});
    CHECK(multiplicity(Rotation(), row3) == 3);
    CHECK(multiplicity(Rotation(pt(1, 0), pt(1, 0)), row3) == 2);
    const PointSet two({pt(0, 0), pt(1, 0)});
    CHECK(multiplicity(Rotation(pt(-1, 0), pt(1, 0)), two) == 2);
}

TEST_CASE("classify") {
    CHECK(classify(Rotation(pt(1, 0), pt(0, 1)), grid(3, 3)) == MotionClass::Joint);
    const PointSet row4({pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)});
    CHECK(classify(Rotation(pt(1, 0), pt(1, 0)), row4) == MotionClass::Flat);
    CHECK(classify(Rotation(pt(-1, 0), pt(1, 0)), PointSet({pt(0, 0), pt(1, 0)})) ==
          MotionClass::Low);
}

TEST_CASE("nk tables") {
    const auto [nk, ngeq] = nk_tables(rotation_census(unit_square()));
    CHECK(nk.at(2) == 16);
    CHECK(nk.at(4) == 3);
    CHECK(ngeq.at(2) == 19);
    CHECK(ngeq.at(4) == 3);

    const auto [nk2, ngeq2] = nk_tables(rotation_census(PointSet({pt(0, 0), pt(1, 0)})));
    CHECK(nk2.at(2) == 1);
    CHECK(ngeq2.lower_bound(3) == ngeq2.end()); // N_{>=3} = 0

    const RotationCensus empty_census(std::vector<CensusEntry>{}, 1, 0, 0, false);
    const auto [nk3, ngeq3] = nk_tables(empty_census);
    CHECK(nk3.empty());
    CHECK(ngeq3.empty());
}

TEST_CASE("incidences") {
    // Away from the origin so every fixed-point parabola h_{a,a} exists.
    const PointSet s({pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)});
    std::vector<HParabola> fixed;
    for (const auto& p : s) fixed.push_back(parabola_from_pair(p, p));
    CHECK(incidences({Rotation()}, fixed) == 4);

    const Rotation quarter(pt(0, 1), pt(1, 0));
    const std::vector<HParabola> cs = {parabola_from_pair(pt(0, 0), pt(1, 0)),
                                       parabola_from_pair(pt(1, 0), pt(1, 1)),
                                       parabola_from_pair(pt(0, 0), pt(0, 1))};
    CHECK(incidences({quarter}, cs) == 2);
    CHECK(incidences({}, cs) == 0);
}

TEST_CASE("incidence cross check accounts for degenerate losses") {
    // Half-turn about the origin maps a to -a for every point; every image
    // pair is degenerate.
    const PointSet s({pt(1, 0), pt(-1, 0), pt(0, 2), pt(0, -2)});
    const Rotation half(pt(-1, 0), pt(0, 0));
    const auto cc = incidence_cross_check({half}, s);
    CHECK(cc.multiplicity_sum == 4);
    CHECK(cc.degenerate_losses == 4);
    CHECK(cc.incidence_count == 0);

    const auto cc2 = incidence_cross_check({Rotation()}, s);
    CHECK(cc2.multiplicity_sum == 4);
    CHECK(cc2.degenerate_losses == 0);
    CHECK(cc2.incidence_count == 4);
}

TEST_CASE("census identity and H1 inequality on random and structured sets") {
    rotlab_test::TestRng rng(4242);
    std::vector<PointSet> sets;
    for (int i = 0; i < 6; ++i)
        sets.push_back(random_points(static_cast<int>(rng.integer(2, 10)),
                                     static_cast<std::uint64_t>(i), 8, 4));
    sets.push_back(grid(3, 4));
    sets.push_back(lower_bound_set(2));
    for (const auto& s : sets) {
        const RotationCensus census = rotation_census(s);
        long long sum = 0;
        for (const auto& e : census.entries()) sum += e.multiplicity * (e.multiplicity - 1);
        REQUIRE(sum == k_size(s));
        if (census.distance_class_count() >= 1)
            REQUIRE(Rational(census.quadruple_count()) >=
                    h1_quadruple_lower_bound(census.point_count(),
                                             census.distance_class_count()));

        const auto oracle = quadruple_oracle(s);
        REQUIRE(oracle.size() == census.entries().size());
        for (const auto& e : census.entries())
            REQUIRE(oracle.at(e.rotation) == e.quadruple_count);
    }
}

TEST_CASE("census output is worker-count independent") {
    const PointSet s = grid(4, 4);
    CensusOptions one, two, eight;
    one.workers = 1;
    two.workers = 2;
    eight.workers = 8;
    const std::string a = census_to_json_text(rotation_census(s, one));
    const std::string b = census_to_json_text(rotation_census(s, two));
    const std::string c = census_to_json_text(rotation_census(s, eight));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(census_rows_to_csv_text(rotation_census(s, one)) ==
          census_rows_to_csv_text(rotation_census(s, eight)));
}

TEST_CASE("identity inclusion is opt-in") {
    const PointSet s = unit_square();
    const RotationCensus without = rotation_census(s);
    CHECK(without.find(Rotation()) == nullptr);
    CHECK_FALSE(without.identity_included());

    CensusOptions opts;
    opts.include_identity = true;
    const RotationCensus with = rotation_census(s, opts);
    const CensusEntry* id = with.find(Rotation());
    REQUIRE(id != nullptr);
    CHECK(id->multiplicity == 4);
    CHECK(id->quadruple_count == 0); // arises from no quadruple
    CHECK(id->classification == MotionClass::Joint);
    CHECK(with.identity_included());
    CHECK(with.entries().size() == without.entries().size() + 1);
}
