#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "graph_oracle.hpp"
#include "menger/enumeration.hpp"
#include "menger/nfun.hpp"

using namespace menger;
namespace go = graph_oracle;

namespace {

const BaseSet kB2{2};

NPlaceFunction unary(std::vector<int> table) {
    const int m = static_cast<int>(table.size());
    return NPlaceFunction(1, BaseSet{m}, std::move(table));
}

const NPlaceFunction kEmpty = unary({kUndefined, kUndefined});
const NPlaceFunction kId = unary({0, 1});
const NPlaceFunction kSwap = unary({1, 0});
const NPlaceFunction kC0 = unary({0, 0});

} // namespace

TEST_CASE("mixed-radix encoding, first coordinate most significant") {
    NPlaceFunction f(2, BaseSet{3});
    CHECK(f.slots() == 9);
    std::vector<int> t{1, 2};
    CHECK(f.encode(t) == 5);
    std::vector<int> back(2);
    f.decode(5, back);
    CHECK(back == t);
    f.set(t, 0);
    CHECK(f(t) == 0);
    CHECK(f.domain_size() == 1);
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(NPlaceFunction(1, kB2, std::vector<int>{0}),
                    StructuralError);
    CHECK_THROWS_AS(NPlaceFunction(1, kB2, std::vector<int>{0, 2}),
                    StructuralError);
    CHECK_THROWS_AS(NPlaceFunction(0, kB2), StructuralError);
    CHECK_THROWS_AS(NPlaceFunction(1, BaseSet{0}), StructuralError);
    // 2^13 = 8192 slots exceeds the default cap; 2^12 = 4096 does not.
    CHECK_THROWS_AS(NPlaceFunction(13, kB2), CapError);
    CHECK(NPlaceFunction(12, kB2).slots() == 4096);
}

TEST_CASE("projection and proj_restrict") {
    CHECK(projection(1, 1, kB2) == kId);
    NPlaceFunction p2 = projection(2, 2, BaseSet{2});
    std::vector<int> t{0, 1};
    CHECK(p2(t) == 1);
    t = {1, 0};
    CHECK(p2(t) == 0);
    CHECK_THROWS_AS(projection(3, 2, kB2), StructuralError);

    // R_i f is the i-th projection cut down to dom f.
    NPlaceFunction f = unary({1, kUndefined});
    CHECK(proj_restrict(1, f) == unary({0, kUndefined}));
    CHECK(proj_restrict(1, kEmpty) == kEmpty);
    CHECK(proj_restrict(1, kSwap) == kId);

    NPlaceFunction g(2, kB2);
    g.set(std::vector<int>{0, 1}, 0);
    NPlaceFunction r2 = proj_restrict(2, g);
    CHECK(r2.domain_size() == 1);
    t = {0, 1};
    CHECK(r2(t) == 1);
    CHECK_THROWS_AS(proj_restrict(2, f), StructuralError);
}

TEST_CASE("composition basics") {
    CHECK(compose(kSwap, {kSwap}) == kId);
    CHECK(compose(kId, {kSwap}) == kSwap);
    CHECK(compose(kSwap, {kEmpty}) == kEmpty);
    CHECK(compose(kEmpty, {kId}) == kEmpty);
    // Strictness: the outer value is discarded where the inner is undefined.
    NPlaceFunction partial = unary({1, kUndefined});
    CHECK(compose(kC0, {partial}) == unary({0, kUndefined}));
    CHECK_THROWS_AS(compose(kSwap, std::vector<NPlaceFunction>{}),
                    StructuralError);
    CHECK_THROWS_AS(compose(kSwap, {unary({0, 1, 2})}), StructuralError);
}

TEST_CASE("binary composition against the tuple example") {
    NPlaceFunction f(2, kB2);
    f.set(std::vector<int>{1, 0}, 1);
    NPlaceFunction g1 = projection(2, 2, kB2);
    NPlaceFunction g2 = projection(1, 2, kB2);
    // f[p2, p1](x, y) = f(y, x); defined only at (0, 1).
    NPlaceFunction h = compose(f, {g1, g2});
    CHECK(h.domain_size() == 1);
    std::vector<int> t{0, 1};
    CHECK(h(t) == 1);
}

TEST_CASE("intersection and inclusion") {
    CHECK(intersect(kId, kSwap) == kEmpty);
    CHECK(intersect(kId, kC0) == unary({0, kUndefined}));
    CHECK(intersect(kId, kId) == kId);
    CHECK(is_subfunction(kEmpty, kSwap));
    CHECK(is_subfunction(unary({0, kUndefined}), kId));
    CHECK(!is_subfunction(kId, kSwap));
    CHECK(is_subdomain(unary({1, kUndefined}), kSwap));
    CHECK(!is_subdomain(kSwap, unary({1, kUndefined})));
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(kId) == std::vector<int>{0, 1});
    CHECK(fixed_points(kSwap).empty());
    CHECK(fixed_points(kC0) == std::vector<int>{0});
    CHECK(fixed_points(kEmpty).empty());
    CHECK(has_fixed_point(kC0));
    CHECK(!has_fixed_point(kSwap));

    NPlaceFunction f(2, kB2);
    f.set(std::vector<int>{1, 1}, 1);
    CHECK(fixed_points(f) == std::vector<int>{1});
}

TEST_CASE("unary operations agree with the graph-model oracle") {
    auto universe = all_partial_functions(2, 1);
    REQUIRE(universe.size() == 9);
    std::vector<go::Graph> graphs;
    for (const auto& f : universe) graphs.push_back(go::graph_of(f));

    for (std::size_t a = 0; a < universe.size(); ++a) {
        CHECK(go::to_table(1, kB2, graphs[a]) == universe[a]);
        CHECK(proj_restrict(1, universe[a]) ==
              go::to_table(1, kB2, go::proj_restrict(1, graphs[a])));
        CHECK(fixed_points(universe[a]) == go::fixed_points(graphs[a], 1, 2));
        for (std::size_t b = 0; b < universe.size(); ++b) {
            CHECK(compose(universe[a], {universe[b]}) ==
                  go::to_table(1, kB2,
                               go::compose(graphs[a], {graphs[b]}, 1, 2)));
            CHECK(intersect(universe[a], universe[b]) ==
                  go::to_table(1, kB2, go::intersect(graphs[a], graphs[b])));
            CHECK(is_subfunction(universe[a], universe[b]) ==
                  go::is_subgraph(graphs[a], graphs[b]));
            CHECK(is_subdomain(universe[a], universe[b]) ==
                  go::is_subdomain(graphs[a], graphs[b]));
        }
    }
}

TEST_CASE("unary operation laws over the whole universe") {
    auto universe = all_partial_functions(2, 1);
    for (const auto& f : universe) {
        // superassociativity and stabilization by the own projection
        CHECK(compose(f, {proj_restrict(1, f)}) == f);
        for (const auto& g : universe) {
            CHECK(intersect(f, g) == intersect(g, f));
            CHECK(is_subfunction(intersect(f, g), f));
            for (const auto& h : universe)
                CHECK(compose(compose(f, {g}), {h}) ==
                      compose(f, {compose(g, {h})}));
        }
    }
}

TEST_CASE("binary operations agree with the graph-model oracle") {
    auto universe = all_partial_functions(2, 2);
    REQUIRE(universe.size() == 81);
    std::vector<go::Graph> graphs;
    for (const auto& f : universe) graphs.push_back(go::graph_of(f));
    BaseSet b{2};

    for (std::size_t a = 0; a < universe.size(); ++a) {
        CHECK(proj_restrict(2, universe[a]) ==
              go::to_table(2, b, go::proj_restrict(2, graphs[a])));
        // thinned inner sweep for runtime
        for (std::size_t g1 = 0; g1 < universe.size(); g1 += 3)
            for (std::size_t g2 = 0; g2 < universe.size(); g2 += 3)
                CHECK(compose(universe[a], {universe[g1], universe[g2]}) ==
                      go::to_table(2, b,
                                   go::compose(graphs[a],
                                               {graphs[g1], graphs[g2]}, 2,
                                               2)));
    }
}

TEST_CASE("JSON round trip") {
    for (const auto& f : all_partial_functions(2, 1)) {
        nlohmann::json j = f;
        CHECK(j.at("arity") == 1);
        CHECK(j.at("base") == 2);
        CHECK(j.get<NPlaceFunction>() == f);
    }
    nlohmann::json j = nlohmann::json::parse(
        R"({"arity": 1, "base": 2, "table": [null, 0]})");
    CHECK(j.get<NPlaceFunction>() == unary({kUndefined, 0}));
    nlohmann::json bad = nlohmann::json::parse(
        R"({"arity": 1, "base": 2, "table": [0, 1, 0]})");
    CHECK_THROWS_AS(bad.get<NPlaceFunction>(), StructuralError);
}
