#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "menger/enumeration.hpp"
#include "menger/representation.hpp"

using namespace menger;

namespace {

NPlaceFunction unary(std::vector<int> table) {
    const int m = static_cast<int>(table.size());
    return NPlaceFunction(1, BaseSet{m}, std::move(table));
}

struct Instance {
    ConcreteAlgebra phi;
    AbstractAlgebra g;
    ChiRelation chi_rel;
};

/// Members: 0 = nowhere-defined, 1 = identity, 2 = transposition.
Instance three_element() {
    Instance in;
    in.phi = close({unary({1, 0})});
    in.g = abstractify(in.phi);
    in.chi_rel = chi(in.g);
    return in;
}

} // namespace

TEST_CASE("the partition from the identity element") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 1, in.chi_rel.rel);
    CHECK(p.carrier == 3);
    CHECK(p.num_classes == 3);
    // Classes in order of minimal member: {0}, {1}, {2}; W is the class of
    // the functions with smaller domain than the identity.
    CHECK(p.class_of == std::vector<int>{0, 1, 2});
    REQUIRE(p.w_class.has_value());
    CHECK(*p.w_class == 0);
    CHECK(p.indexing == std::vector<int>{1, 2});
    CHECK(p.index_count() == 2);
    CHECK(p.position_of_class(1) == 0);
    CHECK(p.position_of_class(2) == 1);
    CHECK(p.position_of_class(0) == -1);
    CHECK(p.members[1] == std::vector<int>{1});
}

TEST_CASE("the partition from the zero element is a single class") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 0, in.chi_rel.rel);
    CHECK(p.num_classes == 1);
    CHECK(!p.w_class.has_value());
    CHECK(p.index_count() == 1);
}

TEST_CASE("the simplest representation from the identity is faithful") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 1, in.chi_rel.rel);
    Representation rep = simplest_representation(in.g, p);
    REQUIRE(rep.map.size() == 3);
    CHECK(rep.index_count == 2);
    CHECK(rep.map[0] == NPlaceFunction(1, BaseSet{2}));  // nowhere defined
    CHECK(rep.map[1] == unary({0, 1}));
    CHECK(rep.map[2] == unary({1, 0}));
    CHECK(verify_representation(in.g, rep).pass);
    CHECK(is_faithful(rep));
    CHECK(fixed_points(rep.map[1]) == std::vector<int>{0, 1});
    CHECK(fixed_points(rep.map[2]).empty());
}

TEST_CASE("the single-class representation collapses and is unfaithful") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 0, in.chi_rel.rel);
    Representation rep = simplest_representation(in.g, p);
    // No W: every image lands in the one class, so every element maps to
    // the total constant function.
    for (const auto& f : rep.map)
        CHECK(f == unary({0}));
    CHECK(verify_representation(in.g, rep).pass);
    CHECK(!is_faithful(rep));
}

TEST_CASE("a non-v-regular hand-made partition is rejected") {
    Instance in = three_element();
    ClassPartition p;
    p.carrier = 3;
    p.num_classes = 2;
    p.class_of = {0, 0, 1};  // lumps the nowhere-defined with the identity
    p.members = {{0, 1}, {2}};
    p.indexing = {0, 1};
    // The transposition maps that lump onto both classes.
    CHECK_THROWS_AS(simplest_representation(in.g, p), IntegrityError);
}

TEST_CASE("build_Eg_Wg rejects relations whose complement is no l-ideal") {
    Instance in = three_element();
    BinaryRelation bogus(3);
    for (int x = 0; x < 3; ++x) bogus.insert(x, x);
    bogus.insert(1, 2);  // chi<1> = {1, 2} would be fine, but
    // forward image of 0 is just {0}: W_0 = {1, 2}, not an l-ideal.
    CHECK_THROWS_AS(build_Eg_Wg(in.g, 0, bogus), IntegrityError);
}

TEST_CASE("verify_representation pinpoints a broken preservation law") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 1, in.chi_rel.rel);
    Representation rep = simplest_representation(in.g, p);

    Representation bad = rep;
    bad.map[2] = unary({1, 1});
    RepresentationVerdict v = verify_representation(in.g, bad);
    CHECK(!v.pass);
    CHECK(!v.violated.empty());
    CHECK(!v.witness.empty());

    Representation short_map = rep;
    short_map.map.pop_back();
    CHECK_THROWS_AS(verify_representation(in.g, short_map), StructuralError);
}

TEST_CASE("sums over disjoint index sets") {
    Instance in = three_element();
    std::vector<Representation> parts;
    for (int origin : {1, 2}) {
        ClassPartition p = build_Eg_Wg(in.g, origin, in.chi_rel.rel);
        Representation rep = simplest_representation(in.g, p);
        rep.origin = origin;
        parts.push_back(std::move(rep));
    }
    SumRepresentation sum = sum_representations(parts);
    CHECK(sum.total_indices == 4);
    CHECK(sum.offset == std::vector<int>{0, 2});
    CHECK(sum.tag(0) == std::pair<int, int>{1, 0});
    CHECK(sum.tag(3) == std::pair<int, int>{2, 1});
    CHECK_THROWS_AS(sum.tag(-1), StructuralError);

    CHECK(sum.faithful());
    CHECK(sum.has_fixed_point(1));
    CHECK(!sum.has_fixed_point(2));
    CHECK(sum.fixed_point_indices(1) == std::vector<int>{0, 1, 2, 3});

    NPlaceFunction u1 = sum.materialize(1);
    CHECK(u1 == NPlaceFunction(1, BaseSet{4}, std::vector<int>{0, 1, 2, 3}));
    NPlaceFunction u2 = sum.materialize(2);
    CHECK(u2 == NPlaceFunction(1, BaseSet{4}, std::vector<int>{1, 0, 3, 2}));
    CHECK(!has_fixed_point(u2));
}

TEST_CASE("sum parts must be compatible") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 1, in.chi_rel.rel);
    Representation rep = simplest_representation(in.g, p);
    Representation other = rep;
    other.rank = 2;
    CHECK_THROWS_AS(sum_representations({rep, other}), StructuralError);
}

TEST_CASE("representation JSON form") {
    Instance in = three_element();
    ClassPartition p = build_Eg_Wg(in.g, 1, in.chi_rel.rel);
    Representation rep = simplest_representation(in.g, p);
    rep.origin = 1;
    nlohmann::json j = rep;
    CHECK(j.at("origin") == 1);
    CHECK(j.at("indices") == std::vector<int>{1, 2});
    CHECK(j.at("map").size() == 3);
    CHECK(j.at("map").at("1").at("table") == std::vector<int>{0, 1});
}
