#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <dowker/dowker.hpp>

namespace fixtures {

using namespace dowker;

inline Relation from_rows(const std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
                          const std::vector<std::string>& attrs) {
    std::vector<std::string> xs;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [x, ys] : rows) {
        xs.push_back(x);
        for (const auto& y : ys) pairs.emplace_back(x, y);
    }
    return Relation::build(pairs, xs, attrs);
}

inline Relation r4() {
    return from_rows({{"1", {"a", "b"}}, {"2", {"b", "c"}}, {"3", {"c"}}, {"4", {"c"}}},
                     {"a", "b", "c"});
}

inline Relation r4_prime() { return r4().add_entry("3", "a"); }

inline Relation health() {
    return from_rows({{"1", {"smokes", "has_cancer"}},
                      {"2", {"has_cancer", "drinks_soda"}},
                      {"3", {"drinks_soda"}},
                      {"4", {"drinks_soda"}}},
                     {"smokes", "has_cancer", "drinks_soda"});
}

// the five-row Moebius band relation; uppercase ids for the travel guides, lowercase for morphisms
inline Relation mobius5(bool uppercase) {
    std::vector<std::string> a = uppercase ? std::vector<std::string>{"A", "B", "C", "D", "E"}
                                           : std::vector<std::string>{"a", "b", "c", "d", "e"};
    return from_rows({{"1", {a[0], a[1], a[4]}},
                      {"2", {a[0], a[1], a[2]}},
                      {"3", {a[1], a[2], a[3]}},
                      {"4", {a[2], a[3], a[4]}},
                      {"5", {a[0], a[3], a[4]}}},
                     a);
}

inline Relation g5() { return mobius5(true); }

inline Relation t4() {
    return from_rows({{"1", {"a", "b", "c"}},
                      {"2", {"b", "c", "d"}},
                      {"3", {"a", "c", "d"}},
                      {"4", {"a", "b", "d"}}},
                     {"a", "b", "c", "d"});
}

inline Relation ex20() {
    return from_rows({{"1", {"a", "b", "d"}},
                      {"2", {"a", "c", "d"}},
                      {"3", {"b", "c", "d"}},
                      {"4", {"a", "b", "e"}},
                      {"5", {"a", "c", "e"}},
                      {"6", {"b", "c", "e"}}},
                     {"a", "b", "c", "d", "e"});
}

inline Relation d17() {
    std::vector<std::vector<std::string>> rows = {
        {"d", "f", "h"}, {"d", "e", "f"}, {"f", "g", "h"}, {"c", "f", "g"}, {"a", "e", "f"},
        {"a", "c", "e"}, {"c", "d", "h"}, {"b", "d", "e"}, {"a", "b", "g"}, {"b", "c", "g"},
        {"a", "g", "h"}, {"a", "b", "h"}, {"b", "c", "h"}, {"a", "c", "d"}, {"a", "b", "d"},
        {"b", "c", "e"}, {"a", "c", "f"}};
    std::vector<std::pair<std::string, std::vector<std::string>>> labeled;
    for (std::size_t i = 0; i < rows.size(); ++i)
        labeled.emplace_back(std::to_string(i + 1), rows[i]);
    return from_rows(labeled, {"a", "b", "c", "d", "e", "f", "g", "h"});
}

inline Relation mm10() {
    std::vector<std::vector<std::string>> rows = {
        {"a", "b", "e"}, {"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}, {"a", "d", "e"},
        {"a", "b", "d"}, {"b", "c", "e"}, {"a", "c", "d"}, {"b", "d", "e"}, {"a", "c", "e"}};
    std::vector<std::pair<std::string, std::vector<std::string>>> labeled;
    for (std::size_t i = 0; i < rows.size(); ++i)
        labeled.emplace_back(std::to_string(i + 1), rows[i]);
    return from_rows(labeled, {"a", "b", "c", "d", "e"});
}

// preferences, flavor composition, and their boolean product
inline Relation icecream_c() {
    return from_rows({{"Bob", {"gc", "gs", "cs"}},
                      {"Alice", {"cs", "cv", "sv"}},
                      {"David", {"gs", "sv", "gv"}},
                      {"Cindy", {"gc", "cv", "gv"}}},
                     {"gc", "gs", "cs", "cv", "sv", "gv"});
}

inline Relation icecream_s() {
    return from_rows({{"gc", {"g", "c"}},
                      {"gs", {"g", "s"}},
                      {"cs", {"c", "s"}},
                      {"cv", {"c", "v"}},
                      {"sv", {"s", "v"}},
                      {"gv", {"g", "v"}}},
                     {"g", "c", "s", "v"});
}

inline Relation icecream_f() {
    return from_rows({{"Bob", {"g", "c", "s"}},
                      {"Alice", {"c", "s", "v"}},
                      {"David", {"g", "s", "v"}},
                      {"Cindy", {"g", "c", "v"}}},
                     {"g", "c", "s", "v"});
}

// the action relation of the five-state mixed graph, taken as relation data
inline Relation arel238() {
    return from_rows({{"s1", {"b2", "b3", "b4", "b5"}},
                      {"s2", {"d1", "b3", "b4", "b5"}},
                      {"s3", {"d1", "b2", "b4", "b5"}},
                      {"s4", {"d1", "b2", "b3", "b5"}},
                      {"s234", {"a1", "d1", "b5"}},
                      {"s5", {"a1", "a2", "a3", "a4", "d1"}},
                      {"s54", {"a2", "a3", "a4", "d1", "b2", "b3"}},
                      {"s53", {"a2", "a3", "a4", "d1", "b2", "b4"}},
                      {"s52", {"a2", "a3", "a4", "d1", "b3", "b4"}},
                      {"s15", {"a2", "a3", "a4", "b2", "b3", "b4"}}},
                     {"a1", "a2", "a3", "a4", "d1", "b2", "b3", "b4", "b5"});
}

inline UncertainGraph g214() {
    UncertainGraph g;
    g.states = {"1", "2", "3"};
    g.actions = {{"a1", "1", {"3"}, ActionKind::deterministic},
                 {"a2", "2", {"3"}, ActionKind::deterministic},
                 {"a3", "3", {"1", "2"}, ActionKind::nondeterministic},
                 {"a4", "2", {"1"}, ActionKind::deterministic},
                 {"a5", "1", {"2"}, ActionKind::deterministic}};
    return g;
}

inline UncertainGraph g202() {
    UncertainGraph g;
    g.states = {"1", "2", "3", "4"};
    g.actions = {{"e1", "1", {"2"}, ActionKind::deterministic},
                 {"e2", "2", {"3"}, ActionKind::deterministic},
                 {"e3", "3", {"1"}, ActionKind::deterministic},
                 {"a1", "1", {"3", "4"}, ActionKind::nondeterministic},
                 {"a2", "2", {"4"}, ActionKind::deterministic},
                 {"a3", "3", {"2", "4"}, ActionKind::nondeterministic},
                 {"b4", "4", {"1", "2", "3"}, ActionKind::nondeterministic}};
    return g;
}

// deterministic three-cycle with enough back actions for full controllability
inline UncertainGraph ham3() {
    UncertainGraph g;
    g.states = {"1", "2", "3"};
    g.actions = {{"c1", "1", {"2"}, ActionKind::deterministic},
                 {"c2", "2", {"3"}, ActionKind::deterministic},
                 {"c3", "3", {"1"}, ActionKind::deterministic},
                 {"d2", "2", {"1"}, ActionKind::deterministic},
                 {"d3", "3", {"2"}, ActionKind::deterministic}};
    return g;
}

inline RelationMorphism m_to_t() {
    return RelationMorphism{mobius5(false),
                            t4(),
                            {{"1", "4"}, {"2", "1"}, {"3", "2"}, {"4", "3"}, {"5", "4"}},
                            {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"e", "a"}}};
}

inline RelationMorphism ex58_inclusion() {
    Relation r = Relation::build({{"1", "a"}}, {"1"}, {"a"});
    Relation q = Relation::build({{"1", "a"}, {"1", "b"}, {"2", "a"}}, {"1", "2"}, {"a", "b"});
    return RelationMorphism{r, q, {{"1", "1"}}, {{"a", "a"}}};
}

inline SimplicialComplex ferry_host() {
    Universe u({"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"});
    std::vector<std::pair<std::string, std::string>> edges = {
        {"C", "G"}, {"G", "J"}, {"J", "K"}, {"K", "C"}, {"B", "F"}, {"F", "I"},
        {"I", "J"}, {"J", "B"}, {"A", "B"}, {"D", "C"}, {"E", "K"}, {"H", "I"}};
    std::vector<Bits> gens;
    for (const auto& [a, b] : edges) {
        Bits e(u.size());
        e.set(u.index(a));
        e.set(u.index(b));
        gens.push_back(e);
    }
    return SimplicialComplex::from_generators(u, gens);
}

inline SimplicialComplex square_pattern() {
    Universe u({"p1", "p2", "p3", "p4"});
    auto edge = [](std::size_t i, std::size_t j) {
        Bits b(4);
        b.set(i);
        b.set(j);
        return b;
    };
    return SimplicialComplex::from_generators(u, {edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 0)});
}

// sequence observations ordered by prefix; "0" is the empty observation
inline InferenceLattice dfa_lattice() {
    InferenceLattice l;
    l.p_elements = {"0", "1", "2", "3", "12"};
    l.q_elements = {"0", "a", "b", "c", "aa", "ab", "ba", "bb", "cc"};
    l.p_leq = [](const std::string& a, const std::string& b) {
        if (a == "0") return true;
        if (b == "0") return false;
        for (char c : a)
            if (b.find(c) == std::string::npos) return false;
        return true;
    };
    l.q_leq = [](const std::string& a, const std::string& b) {
        if (a == "0") return true;
        if (b == "0") return false;
        return b.rfind(a, 0) == 0;
    };
    l.proper = {{"12", "a"}, {"12", "b"}, {"1", "ab"}, {"1", "ba"},
                {"2", "aa"}, {"2", "bb"}, {"3", "c"}};
    l.q_top_designated = {"0"};
    l.p_bottom_designated = {"0"};
    return l;
}

// merged variant: observations are prefix-free sets of sequences, "|"-joined handles
inline std::vector<std::string> split_seqs(const std::string& h) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= h.size()) {
        std::size_t end = h.find('|', start);
        if (end == std::string::npos) end = h.size();
        out.push_back(h.substr(start, end - start));
        if (end == h.size()) break;
        start = end + 1;
    }
    return out;
}

inline bool prefix_set_leq(const std::string& a, const std::string& b) {
    if (a == "0") return true;
    if (b == "0") return false;
    for (const auto& s : split_seqs(a)) {
        bool ok = false;
        for (const auto& t : split_seqs(b))
            if (t.rfind(s, 0) == 0) ok = true;
        if (!ok) return false;
    }
    return true;
}

inline InferenceLattice dfa_lattice_merged() {
    InferenceLattice l;
    l.p_elements = {"0", "1", "2", "3", "12"};
    l.q_elements = {"0", "a", "b", "c", "a|b", "ab|ba", "aa|bb", "cc"};
    l.p_leq = dfa_lattice().p_leq;
    l.q_leq = prefix_set_leq;
    l.proper = {{"12", "a|b"}, {"1", "ab|ba"}, {"2", "aa|bb"}, {"3", "c"}};
    l.q_top_designated = {"0"};
    l.p_bottom_designated = {"0"};
    return l;
}

}  // namespace fixtures

#endif
