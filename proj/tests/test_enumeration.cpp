#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "menger/enumeration.hpp"

using namespace menger;

namespace {

NPlaceFunction unary(std::vector<int> table) {
    const int m = static_cast<int>(table.size());
    return NPlaceFunction(1, BaseSet{m}, std::move(table));
}

bool is_closed(const ConcreteAlgebra& phi) {
    const int n = phi.arity;
    for (const auto& f : phi.members) {
        for (int i = 1; i <= n; ++i)
            if (phi.index_of(proj_restrict(i, f)) < 0) return false;
        for (const auto& g : phi.members) {
            if (phi.index_of(intersect(f, g)) < 0) return false;
            if (n == 1 && phi.index_of(compose(f, {g})) < 0) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("closure of the transposition") {
    ConcreteAlgebra phi = close({unary({1, 0})});
    REQUIRE(phi.size() == 3);
    CHECK(phi.members[0] == unary({kUndefined, kUndefined}));
    CHECK(phi.members[1] == unary({0, 1}));
    CHECK(phi.members[2] == unary({1, 0}));
    CHECK(phi.index_of(unary({0, 1})) == 1);
    CHECK(phi.index_of(unary({0, 0})) == -1);
}

TEST_CASE("closure fixpoints and idempotence") {
    CHECK(close({unary({0, 1})}).size() == 1);
    CHECK(close({unary({kUndefined, kUndefined})}).size() == 1);
    CHECK(close(std::vector<NPlaceFunction>{}).size() == 0);

    ConcreteAlgebra phi = close({unary({1, 0}), unary({0, 0})});
    CHECK(is_closed(phi));
    CHECK(close(phi.members) == phi);
}

TEST_CASE("closure respects the member cap") {
    CHECK_THROWS_AS(close({unary({1, 0})}, 2), CapError);
}

TEST_CASE("the full function universe") {
    auto u11 = all_partial_functions(1, 1);
    CHECK(u11.size() == 2);
    auto u21 = all_partial_functions(2, 1);
    REQUIRE(u21.size() == 9);
    CHECK(u21.front() == unary({kUndefined, kUndefined}));
    CHECK(u21.back() == unary({1, 1}));
    CHECK(std::is_sorted(u21.begin(), u21.end()));
    CHECK(all_partial_functions(2, 2).size() == 81);
    // (9+1)^(9^3) blows the universe cap
    CHECK_THROWS_AS(all_partial_functions(9, 3), CapError);
}

TEST_CASE("enumerated closures are distinct, sorted, closed, reproducible") {
    auto corpus = enumerate_closed(2, 1);
    CHECK(corpus.size() > 10);
    CHECK(std::is_sorted(corpus.begin(), corpus.end()));
    for (std::size_t i = 0; i + 1 < corpus.size(); ++i)
        CHECK(!(corpus[i] == corpus[i + 1]));
    for (const auto& phi : corpus) {
        CHECK(is_closed(phi));
        CHECK(std::is_sorted(phi.members.begin(), phi.members.end()));
    }
    CHECK(enumerate_closed(2, 1) == corpus);

    auto tiny = enumerate_closed(1, 1);
    CHECK(tiny.size() == 3);  // {0}, {id}, {0, id} over a one-point base
}

TEST_CASE("abstractify mirrors the concrete operations") {
    ConcreteAlgebra phi = close({unary({1, 0})});
    AbstractAlgebra g = abstractify(phi);
    REQUIRE(g.size == 3);
    CHECK(g.rank == 1);
    CHECK(g.sup.size() == 9);
    CHECK(g.zero == 0);
    CHECK(g.sup_diag(2, 2) == 1);
    CHECK(g.sup_diag(2, 1) == 2);
    CHECK(g.meet_at(1, 2) == 0);
    CHECK(g.r_at(1, 0) == 0);
    CHECK(g.r_at(1, 2) == 1);

    // Every table entry equals the member index of the concrete result.
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(g.sup_diag(x, y) ==
                  phi.index_of(compose(phi.members[static_cast<std::size_t>(x)],
                                       {phi.members[static_cast<std::size_t>(y)]})));
            CHECK(g.meet_at(x, y) ==
                  phi.index_of(intersect(phi.members[static_cast<std::size_t>(x)],
                                         phi.members[static_cast<std::size_t>(y)])));
        }
}

TEST_CASE("abstractify rejects non-closed member lists") {
    ConcreteAlgebra broken;
    broken.base = BaseSet{2};
    broken.arity = 1;
    broken.members = {unary({0, 1}), unary({1, 0})};  // meet escapes
    CHECK_THROWS_AS(abstractify(broken), ClosureViolationError);
    ConcreteAlgebra empty;
    empty.members.clear();
    CHECK_THROWS_AS(abstractify(empty), ContractError);
}

TEST_CASE("corpus JSON round trip") {
    ConcreteAlgebra phi = close({unary({1, 0})});
    nlohmann::json j = phi;
    CHECK(j.at("base") == 2);
    CHECK(j.at("arity") == 1);
    CHECK(j.get<ConcreteAlgebra>() == phi);

    std::swap(j.at("members")[0], j.at("members")[2]);
    CHECK_THROWS_AS(j.get<ConcreteAlgebra>(), StructuralError);
}
