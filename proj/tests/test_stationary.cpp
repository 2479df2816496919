#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "menger/enumeration.hpp"
#include "menger/stationary.hpp"

using namespace menger;

namespace {

NPlaceFunction unary(std::vector<int> table) {
    const int m = static_cast<int>(table.size());
    return NPlaceFunction(1, BaseSet{m}, std::move(table));
}

/// Members: 0 = nowhere-defined, 1 = identity, 2 = transposition.
ConcreteAlgebra three_element() { return close({unary({1, 0})}); }

Subset abstract_subset(const Subset& s) { return s; }

} // namespace

TEST_CASE("stationary subset and concrete zero") {
    ConcreteAlgebra phi = three_element();
    CHECK(stationary_subset(phi) == Subset{0, 1, 0});
    CHECK(concrete_zero(phi) == 0);

    ConcreteAlgebra single = close({unary({0, 1})});
    CHECK(stationary_subset(single) == Subset{1});
    CHECK(concrete_zero(single) == 0);  // a singleton absorbs itself
}

TEST_CASE("concrete zero agrees with the abstract zero on every instance") {
    for (const auto& phi : enumerate_closed(2, 1)) {
        AbstractAlgebra g = abstractify(phi);
        CHECK(concrete_zero(phi) == g.zero);
    }
}

TEST_CASE("the eight stationarity implications hold on every instance") {
    for (const auto& phi : enumerate_closed(2, 1)) {
        std::optional<int> zero = concrete_zero(phi);
        Prop1Report rep = check_proposition1(phi, zero);
        CHECK(rep.ok());
        for (int k = 4; k < 8; ++k)
            CHECK((rep.implication[static_cast<std::size_t>(k)].verdict ==
                   Verdict::Skipped) == !zero.has_value());
        CHECK(check_null_equivalence(phi, zero).verdict != Verdict::Fail);
    }
}

TEST_CASE("a wrong zero hypothesis is caught with a counterexample") {
    ConcreteAlgebra phi = three_element();
    Prop1Report rep = check_proposition1(phi, 1);  // the identity is not 0
    CHECK(!rep.ok());
    bool witnessed = false;
    for (const auto& c : rep.implication)
        if (c.verdict == Verdict::Fail && !c.counterexample.empty())
            witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("syntactic conditions on the three-element instance") {
    AbstractAlgebra g = abstractify(three_element());
    StationaryAnalyzer an(g);

    CHECK(an.syntactic({0, 1, 0}).pass);
    CHECK(an.syntactic({1, 1, 1}).pass);

    SyntacticVerdict swap_only = an.syntactic({0, 0, 1});
    CHECK(!swap_only.pass);
    CHECK(swap_only.failing_condition == "quasi-stable");
    CHECK(swap_only.witness == std::vector<int>{2});

    SyntacticVerdict zero_only = an.syntactic({1, 0, 0});
    CHECK(!zero_only.pass);
    CHECK(zero_only.failing_condition == "16");

    CHECK_THROWS_AS(an.syntactic({0, 0, 0}), ContractError);
}

TEST_CASE("syntactic conditions require a zero") {
    AbstractAlgebra g = abstractify(three_element());
    g.zero.reset();
    StationaryAnalyzer an(g);
    CHECK_THROWS_AS(an.syntactic({0, 1, 0}), ContractError);
    CHECK_THROWS_AS(an.semantic({0, 1, 0}), ContractError);
    CHECK_THROWS_AS(check_theorem_Tprop(an, {0, 1, 0}), ContractError);
}

TEST_CASE("semantic verdicts on the three-element instance") {
    AbstractAlgebra g = abstractify(three_element());
    StationaryAnalyzer an(g);

    SemanticVerdict only_id = an.semantic({0, 1, 0});
    CHECK(only_id.pass);
    CHECK(only_id.representation_ok);
    CHECK(only_id.faithful);
    CHECK(only_id.condition14_ok);
    REQUIRE(only_id.fixed_point_witnesses.size() == 1);
    CHECK(only_id.fixed_point_witnesses[0][0] == 1);
    CHECK(only_id.fixed_point_witnesses[0][1] != 0);  // not from the zero part

    SemanticVerdict all = an.semantic({1, 1, 1});
    CHECK(all.pass);
    CHECK(all.fixed_point_witnesses.size() == 3);

    // The identity-free set {0, 2} is semantically wrong: the transposition
    // part functions are fixed-point-free while 0 gains one from the sum
    // over all of G.
    SemanticVerdict wrong = an.semantic({1, 0, 1});
    CHECK(!wrong.condition14_ok);
    CHECK(!wrong.pass);
}

TEST_CASE("the theorem sweep is exhaustive and consistent at size 3") {
    AbstractAlgebra g = abstractify(three_element());
    StationaryAnalyzer an(g);
    auto verdicts = verify_theorem_T5a(an);
    REQUIRE(verdicts.size() == 7);

    std::set<std::string> passing;
    for (const auto& tv : verdicts) {
        CHECK(tv.consistent());
        CHECK(tv.syntactic.pass == (tv.semantic && tv.semantic->pass));
        if (tv.syntactic.pass) passing.insert(subset_bitmask(tv.h));
    }
    CHECK(passing == std::set<std::string>{"0x2", "0x7"});
}

TEST_CASE("both theorem directions hold on every zero-bearing instance") {
    for (const auto& phi : enumerate_closed(2, 1)) {
        AbstractAlgebra g = abstractify(phi);
        Subset st = stationary_subset(phi);
        if (!g.zero) {
            CHECK(subset_count(st) == phi.size());
            continue;
        }
        StationaryAnalyzer an(g);
        if (subset_count(st) > 0) CHECK(an.syntactic(st).pass);
        for (const auto& tv : verify_theorem_T5a(an)) {
            CHECK(tv.consistent());
            CHECK(tv.syntactic.pass == (tv.semantic && tv.semantic->pass));
            if (tv.syntactic.pass && tv.semantic && tv.semantic->pass) {
                CHECK(check_corollary_18(g, tv.h).verdict != Verdict::Fail);
                CHECK(check_theorem_Tprop(an, tv.h).ok());
            }
        }
    }
}

TEST_CASE("corollary: a stationary subset containing the zero is everything") {
    AbstractAlgebra g = abstractify(three_element());
    CHECK(check_corollary_18(g, {1, 1, 1}).verdict == Verdict::Pass);
    CHECK(check_corollary_18(g, {0, 1, 0}).verdict == Verdict::Pass);
    ImplicationCheck bad = check_corollary_18(g, {1, 1, 0});
    CHECK(bad.verdict == Verdict::Fail);
    CHECK(bad.counterexample == std::vector<int>{2});
    g.zero.reset();
    CHECK(check_corollary_18(g, {1, 1, 1}).verdict == Verdict::Skipped);
}

TEST_CASE("derived properties fail for non-stationary subsets") {
    AbstractAlgebra g = abstractify(three_element());
    StationaryAnalyzer an(g);
    CHECK(check_theorem_Tprop(an, {0, 1, 0}).ok());
    CHECK(check_theorem_Tprop(an, {1, 1, 1}).ok());
    // {transposition} violates several closure properties.
    CHECK(!check_theorem_Tprop(an, {0, 0, 1}).ok());
}

TEST_CASE("subset sweep order, bitmasks and sampling") {
    CHECK(subset_bitmask({1, 0, 1}) == "0x5");
    CHECK(subset_bitmask({0, 0, 0, 0, 1}) == "0x10");
    CHECK(subset_bitmask({1}) == "0x1");

    auto small = subsets_to_sweep(3);
    REQUIRE(small.size() == 7);
    CHECK(subset_bitmask(small.front()) == "0x1");
    CHECK(subset_bitmask(small.back()) == "0x7");
    for (std::size_t i = 0; i + 1 < small.size(); ++i)
        CHECK(subset_less(small[i], small[i + 1]));

    // Just above the exhaustive cap but below the sample budget: still
    // exhaustive.
    CHECK(subsets_to_sweep(13, 12, 10000).size() == 8191);

    auto sampled = subsets_to_sweep(20, 12, 500, 42);
    CHECK(sampled.size() == 500);
    for (std::size_t i = 0; i + 1 < sampled.size(); ++i)
        CHECK(subset_less(sampled[i], sampled[i + 1]));
    CHECK(subsets_to_sweep(20, 12, 500, 42) == sampled);
    CHECK(subsets_to_sweep(20, 12, 500, 43) != sampled);
}

TEST_CASE("nonempty candidate guard") {
    CHECK_THROWS_AS(SubsetCandidate(3, {0, 0, 0}), ContractError);
    CHECK(SubsetCandidate(3, {0, 1, 0}).carrier == 3);
    CHECK(abstract_subset({1}) == Subset{1});
}
