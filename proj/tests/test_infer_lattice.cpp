#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dowker;

namespace {

std::set<std::pair<std::string, std::string>> elems(const Interpretation& it) {
    return {it.elements.begin(), it.elements.end()};
}

}  // namespace

TEST_CASE("the sequence lattice validates") {
    auto l = fixtures::dfa_lattice();
    auto [ok, violations] = validate_inference_lattice(l);
    REQUIRE(ok);
    REQUIRE(violations.empty());

    auto merged = fixtures::dfa_lattice_merged();
    auto [ok2, v2] = validate_inference_lattice(merged);
    REQUIRE(ok2);
}

TEST_CASE("validation flags broken lattices") {
    auto l = fixtures::dfa_lattice();
    l.proper.push_back({"12", "a"});  // duplicate element
    auto [ok, violations] = validate_inference_lattice(l);
    REQUIRE_FALSE(ok);
    REQUIRE_FALSE(violations.empty());

    auto m = fixtures::dfa_lattice();
    // (1,aa) and (1,ab) get two incomparable upper bounds, so their join is undefined
    m.proper = {{"1", "aa"}, {"1", "ab"}, {"12", "a"}, {"13", "a"}};
    auto [ok2, v2] = validate_inference_lattice(m);
    REQUIRE_FALSE(ok2);
}

TEST_CASE("observation protocols on the sequence lattice") {
    auto l = fixtures::dfa_lattice();

    auto top = interpret_observation_q(l, "0");
    REQUIRE(top.outcome == Interpretation::Outcome::top);

    auto gb = interpret_observation_q(l, "b");
    REQUIRE(gb.outcome == Interpretation::Outcome::elements);
    REQUIRE(elems(gb) == std::set<std::pair<std::string, std::string>>{{"12", "b"}});

    auto ga = interpret_observation_q(l, "a");
    REQUIRE(elems(ga) == std::set<std::pair<std::string, std::string>>{{"12", "a"}});

    auto gaa = interpret_observation_q(l, "aa");
    REQUIRE(elems(gaa) == std::set<std::pair<std::string, std::string>>{{"2", "aa"}});

    auto bottom = interpret_observation_p(l, "0");
    REQUIRE(bottom.outcome == Interpretation::Outcome::bottom);

    auto s1 = interpret_observation_p(l, "1");
    REQUIRE(elems(s1) ==
            std::set<std::pair<std::string, std::string>>{{"1", "ab"}, {"1", "ba"}});

    auto s3 = interpret_observation_p(l, "3");
    REQUIRE(elems(s3) == std::set<std::pair<std::string, std::string>>{{"3", "c"}});

    REQUIRE_THROWS_AS(interpret_observation_q(l, "zz"), error);
    REQUIRE_THROWS_AS(interpret_observation_p(l, "99"), error);
}

TEST_CASE("subset handles round trip") {
    Universe u({"a", "b", "c"});
    REQUIRE(subset_handle(u, Bits(3)) == "0");
    REQUIRE(subset_handle(u, u.set_of({"a", "c"})) == "a+c");
    REQUIRE(parse_subset_handle(u, "a+c") == u.set_of({"a", "c"}));
    REQUIRE(parse_subset_handle(u, "0") == Bits(3));
    REQUIRE_THROWS_AS(parse_subset_handle(u, "a+z"), error);
}

TEST_CASE("the galois bridge reproduces relation closures") {
    Relation r = fixtures::r4();
    auto l = galois_as_inference_lattice(r);
    REQUIRE(l.proper.size() == 4);
    auto [ok, violations] = validate_inference_lattice(l);
    REQUIRE(ok);

    auto expect = [&](const std::string& q,
                      const std::set<std::pair<std::string, std::string>>& want) {
        auto it = interpret_observation_q(l, q);
        REQUIRE(it.outcome == Interpretation::Outcome::elements);
        REQUIRE(elems(it) == want);
    };
    REQUIRE(interpret_observation_q(l, "0").outcome == Interpretation::Outcome::top);
    expect("a", {{"1", "a+b"}});
    expect("b", {{"1+2", "b"}});
    expect("a+b", {{"1", "a+b"}});
    expect("c", {{"2+3+4", "c"}});
    REQUIRE(interpret_observation_q(l, "a+c").outcome == Interpretation::Outcome::bottom);
    expect("b+c", {{"2", "b+c"}});
    REQUIRE(interpret_observation_q(l, "a+b+c").outcome == Interpretation::Outcome::bottom);
}

TEST_CASE("bridge interpretations agree with closures on every observation") {
    for (const Relation& r : {fixtures::r4(), fixtures::g5(), fixtures::t4()}) {
        auto l = galois_as_inference_lattice(r);
        for_each_subset(full_bits(r.ny()), [&](const Bits& gamma) {
            auto it = interpret_observation_q(l, subset_handle(r.attributes(), gamma));
            Bits sigma = r.psi(gamma);
            if (gamma.none()) {
                REQUIRE(it.outcome == Interpretation::Outcome::top);
            } else if (sigma.none()) {
                REQUIRE(it.outcome == Interpretation::Outcome::bottom);
            } else {
                // the best element below the observation carries the closure
                REQUIRE(it.outcome == Interpretation::Outcome::elements);
                REQUIRE(it.elements.size() == 1);
                REQUIRE(parse_subset_handle(r.individuals(), it.elements[0].first) == sigma);
                REQUIRE(parse_subset_handle(r.attributes(), it.elements[0].second) ==
                        r.attribute_closure(gamma));
            }
        });
    }
}
