#include "doctest.h"

#include "gspec/bounds.hpp"
#include "gspec/graph_io.hpp"

#include <cmath>

using namespace gspec;

TEST_CASE("parsing pairs and transforms") {
    CHECK(parse_matrix_pair("A_L") == MatrixPair::A_L);
    CHECK(parse_matrix_pair("llrw") == MatrixPair::L_Lrw);
    CHECK(parse_matrix_pair("(A,Lrw)") == MatrixPair::A_Lrw);
    CHECK_THROWS_AS(parse_matrix_pair("L_A"), std::invalid_argument);
    CHECK(parse_transform("F3") == Transform::F3);
    CHECK_THROWS_AS(parse_transform("f4"), std::invalid_argument);
    CHECK(transform_for(MatrixPair::L_Lrw) == Transform::F2);
    CHECK(source_kind(MatrixPair::A_Lrw) == RepresentationKind::Adjacency);
    CHECK(target_kind(MatrixPair::A_L) == RepresentationKind::Laplacian);
}

TEST_CASE("transform parameters") {
    const TransformParams p = transform_params(1, 17);
    CHECK(p.d1 == 9.0);
    CHECK(p.d2 == 9.0);
    CHECK(p.c1 == doctest::Approx(1.0 / 9.0));
    CHECK(apply_transform(Transform::F1, p, 2.0) == 7.0);
    CHECK(apply_transform(Transform::F2, p, 9.0) == doctest::Approx(1.0));
    CHECK(apply_transform(Transform::F3, p, 9.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(transform_params(0, 0), std::domain_error);
    CHECK_THROWS_AS(transform_params(3, 2), std::invalid_argument);
}

TEST_CASE("spectrum transform checks the source kind") {
    const Graph g = gen_star(4);
    const TransformParams p = transform_params(degree_summary(g));
    const Spectrum a = spectrum(g, RepresentationKind::Adjacency);
    CHECK_THROWS_AS(apply_transform(Transform::F2, p, a), std::invalid_argument);
    const std::vector<double> mapped = apply_transform(Transform::F1, p, a);
    REQUIRE(mapped.size() == 4);
    CHECK(mapped[0] == doctest::Approx(2.0 - std::sqrt(3.0)));
}

TEST_CASE("mapped supports follow the affine images") {
    for (const auto& [j, k] : {std::pair{1.0, 4.0}, {2.0, 2.0}, {3.0, 10.0}}) {
        const double s = j + k;
        const Interval f1 = mapped_support(Transform::F1, j, k);
        CHECK(f1.lo == doctest::Approx(s / 2 - k));
        CHECK(f1.hi == doctest::Approx(s / 2 + k));
        const Interval f2 = mapped_support(Transform::F2, j, k);
        CHECK(f2.lo == doctest::Approx(0.0));
        CHECK(f2.hi == doctest::Approx(4 * k / s));
        const Interval f3 = mapped_support(Transform::F3, j, k);
        CHECK(f3.lo == doctest::Approx(-(k - j) / s));
        CHECK(f3.hi == doctest::Approx((3 * k + j) / s));
    }
}

TEST_CASE("eigenvalue bound sets") {
    const BoundSet b = eigenvalue_bound_set(1, 17);
    CHECK(b.e_AL == 8.0);
    CHECK(*b.e_LLrw == doctest::Approx(16.0 / 9.0));
    CHECK(*b.e_ALrw == doctest::Approx(8.0 / 3.0));
    // d_max > 5 d_min: the alternative bound is 2.
    CHECK(*b.e_prime_ALrw == 2.0);

    const BoundSet small = eigenvalue_bound_set(2, 5);
    CHECK(*small.e_prime_ALrw == *small.e_ALrw);

    const BoundSet isolated = eigenvalue_bound_set(0, 3);
    CHECK(isolated.e_AL == 1.5);
    CHECK_FALSE(isolated.e_LLrw.has_value());
    CHECK_FALSE(isolated.e_ALrw.has_value());
    CHECK_FALSE(isolated.e_prime_ALrw.has_value());
    CHECK_FALSE(eigenvalue_bound(isolated, MatrixPair::L_Lrw).has_value());
    CHECK(eigenvalue_bound(isolated, MatrixPair::A_L) == 1.5);

    const BoundSet regular = eigenvalue_bound_set(4, 4);
    CHECK(regular.e_AL == 0.0);
    CHECK(*regular.e_LLrw == 0.0);
    CHECK(*regular.e_ALrw == 0.0);
}

TEST_CASE("gap bound sets") {
    const GapBoundSet g = gap_bound_set(1, 17);
    CHECK(g.g_AL == doctest::Approx(16.0 / 34.0));
    CHECK(*g.g_LLrw == doctest::Approx(32.0 / 17.0));
    CHECK(*g.g_ALrw == doctest::Approx(2.5 * 16.0 / 17.0));
    CHECK(*g.g_prime_LLrw == doctest::Approx(16.0 / 9.0));
    CHECK(*g.g_prime_ALrw == 2.0);
    CHECK(gap_bound(g, MatrixPair::A_L) == g.g_AL);
    CHECK_FALSE(primed_gap_bound(g, MatrixPair::A_L).has_value());
    CHECK(primed_gap_bound(g, MatrixPair::L_Lrw) == g.g_prime_LLrw);
    CHECK_THROWS_AS(gap_bound_set(0, 0), std::domain_error);
    CHECK_FALSE(gap_bound_set(0, 2).g_LLrw.has_value());
}

TEST_CASE("regions") {
    CHECK(classify_region(3, 3).label == Region::Regular);
    CHECK(classify_region(0, 3).label == Region::Bold);
    CHECK(classify_region(1, 3).label == Region::Underlined);
    CHECK(classify_region(2, 3).label == Region::Teletype);
    CHECK(classify_region(2, 4).label == Region::Italic);
    CHECK(classify_region(1, 17).label == Region::Normal);
    CHECK(to_string(Region::Teletype) == "teletype");
    CHECK_THROWS_AS(classify_region(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_region(-1, 3), std::invalid_argument);
}

TEST_CASE("bound table layout") {
    const auto cells = bound_table(5, 7);
    CHECK(cells.size() == 32);
    CHECK(cells.front().d_max == 1);
    CHECK(cells.front().d_min == 0);
    CHECK(cells.back().d_max == 7);
    CHECK(cells.back().d_min == 5);
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const bool ordered = cells[i - 1].d_max < cells[i].d_max ||
                             (cells[i - 1].d_max == cells[i].d_max && cells[i - 1].d_min < cells[i].d_min);
        CHECK(ordered);
        CHECK(cells[i].d_min <= cells[i].d_max);
    }
}

TEST_CASE("maximal crossover detection") {
    const std::vector<double> d = {1.0, -1.0, -0.5, 1.0, -0.9999999, 1.0};
    CHECK(detect_maximal_crossover(d, 1.0).indices == std::vector<std::size_t>{1, 4, 5});
    CHECK(detect_maximal_crossover(d, 1.0, 1e-9).indices == std::vector<std::size_t>{1});
    CHECK(detect_maximal_crossover(d, 0.0).indices.empty());
    CHECK(detect_maximal_crossover(std::vector<double>{}, 1.0).indices.empty());
    CHECK(detect_maximal_crossover(std::vector<double>{1.0, 1.0}, 1.0).indices.empty());
    CHECK_THROWS_AS(detect_maximal_crossover(d, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("pair differences on the star") {
    // mu = (sqrt17, 0 x16, -sqrt17), lambda = (0, 1 x16, 18), d1 = 9.
    const PairDifferences d = pair_differences(MatrixPair::A_L, gen_star(18));
    const double r = std::sqrt(17.0);
    REQUIRE(d.deltas.size() == 18);
    CHECK(d.deltas[0] == doctest::Approx(0.0 - (9.0 - r)));
    for (std::size_t i = 1; i < 17; ++i) CHECK(d.deltas[i] == doctest::Approx(-8.0));
    CHECK(d.deltas[17] == doctest::Approx(18.0 - (9.0 + r)));
    CHECK(d.max_abs_delta == doctest::Approx(8.0));
    CHECK(d.verified);
}

TEST_CASE("pair differences reject mismatched inputs") {
    const Graph g = gen_star(5);
    const DegreeSummary ds = degree_summary(g);
    const Spectrum a = spectrum(g, RepresentationKind::Adjacency);
    const Spectrum l = spectrum(g, RepresentationKind::Laplacian);
    CHECK_THROWS_AS(pair_differences(MatrixPair::A_L, l, a, ds), std::invalid_argument);
    CHECK_THROWS_AS(pair_differences(MatrixPair::A_L, a, spectrum(gen_star(6), RepresentationKind::Laplacian), ds),
                    std::invalid_argument);

    GraphBuilder b(3);
    b.add_edge(0, 1);
    CHECK_THROWS_AS(pair_differences(MatrixPair::L_Lrw, b.build()), std::domain_error);
    CHECK_NOTHROW(pair_differences(MatrixPair::A_L, b.build()));
}

TEST_CASE("gap differences on C(10)") {
    const Graph g = gen_graph_c(10);
    const GapDifferences d = gap_differences(MatrixPair::A_L, g);
    CHECK(d.differences.size() == 27);
    CHECK(d.verified);
    CHECK(d.max_difference == doctest::Approx(d.bound));
    CHECK_FALSE(d.primed_differences.has_value());

    const GapDifferences p = gap_differences(MatrixPair::L_Lrw, g);
    REQUIRE(p.primed_differences.has_value());
    CHECK(p.primed_differences->size() == 27);
    CHECK(*p.max_primed_difference <= *p.primed_bound + kBoundSlack);
}

TEST_CASE("Weyl interval") {
    const WeylReport w = weyl_check(load_graph_file(std::string(GSPEC_DATA_DIR) + "/karate.net"));
    CHECK(w.holds);
    CHECK(w.interval.lo == doctest::Approx(-8.0));
    CHECK(w.interval.hi == doctest::Approx(8.0));
    CHECK(w.differences.size() == 34);

    const WeylReport regular = weyl_check(gen_complete(5));
    CHECK(regular.holds);
    CHECK(regular.interval.length() == 0.0);
}
