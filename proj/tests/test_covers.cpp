#include "fixtures.hpp"

#include "tropigon/covers.hpp"
#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"
#include "tropigon/sweep.hpp"

#include <doctest.h>

#include <set>

using namespace tropigon;

namespace {

// K4 in the pattern of the figure cover: x contracted, v = z on one side, u = y on the other, w = v + u.
MetricGraph k4_figure() {
    return with_lengths(*find_type(3, "(000)"),
                        {{"x", qi(1)}, {"v", qi(1)}, {"z", qi(1)}, {"u", qi(2)}, {"y", qi(2)}, {"w", qi(3)}});
}

std::set<Q> vertex_images(const TropicalCover& c) { return {c.height.begin(), c.height.end()}; }

}  // namespace

TEST_CASE("K4 cover reproduces the figure combinatorics") {
    const auto& T = *find_type(3, "(000)");
    auto r = search_well_contracted_cover(k4_figure(), 3, 2);
    REQUIRE(r.cover.has_value());
    CHECK(r.slopes[T.edge_role("x")] == std::vector<int>{0});
    for (const char* role : {"y", "z", "u", "v", "w"}) {
        CAPTURE(role);
        REQUIRE(r.slopes[T.edge_role(role)].size() == 1);
        CHECK(std::abs(r.slopes[T.edge_role(role)][0]) == 1);
    }
    CHECK(vertex_images(*r.cover).size() == 3);
    auto rep = verify_cover(*r.cover);
    CHECK(rep.degree == 3);
    CHECK(is_well_contracted(*r.cover));
}

TEST_CASE("genus-3 realizable types admit covers, (303) does not") {
    for (const char* name : {"(000)", "(020)", "(111)", "(212)"}) {
        CAPTURE(name);
        auto r = search_well_contracted_cover(fixture::catalog_graph(3, name), 3, 2);
        REQUIRE(r.cover.has_value());
        CHECK(verify_cover(*r.cover).degree == 3);
        CHECK(isometric(canonical_model(r.cover->source), fixture::catalog_graph(3, name)));
    }
    CHECK_FALSE(search_well_contracted_cover(fixture::star303(), 3, 2).cover.has_value());
    CHECK_FALSE(search_well_contracted_cover(fixture::catalog_graph(4, "(303)"), 3, 2).cover.has_value());
}

TEST_CASE("pullbacks of found covers have rank at least one") {
    for (const auto& T : catalog()) {
        if (T.genus != 3) continue;
        auto r = search_well_contracted_cover(T.graph, 3, 2);
        if (!r.cover) continue;
        std::set<Q> hs = vertex_images(*r.cover);
        std::vector<Q> ts{*hs.begin() - 1, *hs.rbegin() + 1};
        for (auto it = hs.begin(); std::next(it) != hs.end(); ++it) ts.push_back((*it + *std::next(it)) / 2);
        for (const Q& t : ts) {
            Divisor D = pullback(*r.cover, t);
            CHECK(D.degree() == 3);
            CHECK(D.effective());
            CHECK(rank(r.cover->source, D) >= 1);
        }
    }
}

TEST_CASE("forbidden patterns") {
    CHECK(detect_sprawling_node(fixture::star303()).size() == 1);
    for (const char* name : {"(213)", "(314)", "(405)"}) CHECK_FALSE(detect_sprawling_node(fixture::catalog_graph(4, name)).empty());
    CHECK(detect_crowded_graph(canonical_model(fixture::crowded())).size() == 1);
    CHECK(detect_tie_fighter(canonical_model(fixture::tie_fighter())).size() == 1);
    CHECK(detect_tie_fighter(canonical_model(fixture::crowded())).empty());
    CHECK(detect_crowded_graph(canonical_model(fixture::tie_fighter())).empty());
    for (const auto& T : catalog()) {
        CAPTURE(T.name);
        CHECK(detect_crowded_graph(T.graph).empty());
        CHECK(detect_tie_fighter(T.graph).empty());
        bool sprawling = !detect_sprawling_node(T.graph).empty();
        if (sprawling) {
            CHECK(T.realizability == Realizability::NotRealizable);
            CHECK_FALSE(search_well_contracted_cover(T.graph, 3, 2).cover.has_value());
        }
    }
}

TEST_CASE("the (303) star cover is harmonic but not well-contracted") {
    TropicalCover c = fixture::star_cover_303();
    auto rep = verify_cover(c);
    CHECK(rep.degree == 3);
    for (int s : rep.slack) CHECK(s >= 0);
    CHECK_FALSE(is_well_contracted(c));
    auto m = identify_type(canonical_model(c.source));
    REQUIRE(m.has_value());
    CHECK(m->type->name == "(303)");
    CHECK(m->type->genus == 4);
}

TEST_CASE("verify_cover rejects broken covers") {
    auto r = search_well_contracted_cover(k4_figure(), 3, 2);
    REQUIRE(r.cover.has_value());
    SUBCASE("wrong dilation") {
        TropicalCover c = *r.cover;
        for (auto& m : c.mu) {
            if (m == 1) {
                m = 2;
                break;
            }
        }
        CHECK_THROWS_AS(verify_cover(c), Error);
        CHECK_FALSE(is_well_contracted(c));
    }
    SUBCASE("moved vertex") {
        TropicalCover c = *r.cover;
        c.height[0] += qi(1, 7);
        CHECK_THROWS_AS(verify_cover(c), Error);
    }
    SUBCASE("contracted loop") {
        TropicalCover c;
        c.source.add_vertex();
        c.source.add_vertex();
        c.source.add_edge(0, 1, qi(1));
        c.source.add_edge(1, 1, qi(1));
        c.height = {qi(0), qi(1)};
        c.mu = {1, 0};
        try {
            verify_cover(c);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ContractedLoop);
        }
    }
}

TEST_CASE("projection covers of sampled curves") {
    for (auto [g, n] : {std::pair{3, 1}, std::pair{4, 0}, std::pair{4, 2}}) {
        auto all = unimodular_triangulations(hirzebruch_polygon(g, n));
        for (size_t i = 0; i < all.size(); i += all.size() / 25) {
            auto h0 = is_regular(all[i]);
            if (!h0) continue;
            auto rng = sample_rng(9, i, 0);
            auto curve = dual_tropical_curve(all[i], sample_heights(all[i], *h0, rng));
            TropicalCover c = projection_cover(curve);
            auto rep = verify_cover(c);
            CHECK(rep.degree == 3);
            CHECK(is_well_contracted(c));
            for (int s : rep.slack) CHECK((s == 0 || s == 1));
        }
    }
}
