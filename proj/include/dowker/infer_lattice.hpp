#ifndef DOWKER_INFER_LATTICE_HPP
#define DOWKER_INFER_LATTICE_HPP

#include "strategy.hpp"

namespace dowker {

// bounded lattice of (p, q) pairs over observation posets P and Q
struct InferenceLattice {
    // explicit element lists when available; may stay empty in comparator form
    std::vector<std::string> p_elements, q_elements;
    std::function<bool(const std::string&, const std::string&)> p_leq, q_leq;
    std::vector<std::pair<std::string, std::string>> proper;
    // designated observations interpreted directly as the lattice extremes
    std::vector<std::string> q_top_designated;
    std::vector<std::string> p_bottom_designated;

    bool pair_leq(std::size_t i, std::size_t j) const {
        return p_leq(proper[i].first, proper[j].first) &&
               q_leq(proper[j].second, proper[i].second);
    }
};

inline std::pair<bool, std::vector<std::string>> validate_inference_lattice(
    const InferenceLattice& l) {
    std::vector<std::string> violations;
    auto check_order = [&](const std::vector<std::string>& elems,
                           const std::function<bool(const std::string&, const std::string&)>& leq,
                           const char* which) {
        for (const auto& a : elems) {
            if (!leq(a, a)) violations.push_back(std::string(which) + " not reflexive at " + a);
            for (const auto& b : elems) {
                if (a != b && leq(a, b) && leq(b, a))
                    violations.push_back(std::string(which) + " not antisymmetric: " + a + "," + b);
                for (const auto& c : elems)
                    if (leq(a, b) && leq(b, c) && !leq(a, c))
                        violations.push_back(std::string(which) + " not transitive: " + a + "<" + b +
                                             "<" + c);
            }
        }
    };
    if (!l.p_elements.empty()) check_order(l.p_elements, l.p_leq, "P");
    if (!l.q_elements.empty()) check_order(l.q_elements, l.q_leq, "Q");

    std::size_t n = l.proper.size();
    auto name = [&](std::size_t i) { return "(" + l.proper[i].first + "," + l.proper[i].second + ")"; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && l.pair_leq(i, j) && l.pair_leq(j, i))
                violations.push_back("duplicate lattice element: " + name(i));

    // joins and meets must exist: at most one minimal upper / maximal lower bound
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> ub, lb;
            for (std::size_t k = 0; k < n; ++k) {
                if (l.pair_leq(i, k) && l.pair_leq(j, k)) ub.push_back(k);
                if (l.pair_leq(k, i) && l.pair_leq(k, j)) lb.push_back(k);
            }
            auto minimal = [&](const std::vector<std::size_t>& s) {
                std::vector<std::size_t> out;
                for (std::size_t a : s) {
                    bool keep = true;
                    for (std::size_t b : s)
                        if (b != a && l.pair_leq(b, a)) keep = false;
                    if (keep) out.push_back(a);
                }
                return out;
            };
            auto maximal = [&](const std::vector<std::size_t>& s) {
                std::vector<std::size_t> out;
                for (std::size_t a : s) {
                    bool keep = true;
                    for (std::size_t b : s)
                        if (b != a && l.pair_leq(a, b)) keep = false;
                    if (keep) out.push_back(a);
                }
                return out;
            };
            if (minimal(ub).size() > 1)
                violations.push_back("join of " + name(i) + " and " + name(j) + " undefined");
            if (maximal(lb).size() > 1)
                violations.push_back("meet of " + name(i) + " and " + name(j) + " undefined");
        }
    return {violations.empty(), violations};
}

struct Interpretation {
    enum class Outcome { bottom, top, elements } outcome = Outcome::elements;
    std::vector<std::pair<std::string, std::string>> elements;
};

inline Interpretation interpret_observation_q(const InferenceLattice& l, const std::string& q) {
    if (!l.q_elements.empty() &&
        std::find(l.q_elements.begin(), l.q_elements.end(), q) == l.q_elements.end())
        fail(errc::unknown_element, "unknown observation: " + q);
    if (std::find(l.q_top_designated.begin(), l.q_top_designated.end(), q) !=
        l.q_top_designated.end())
        return {Interpretation::Outcome::top, {}};
    std::vector<std::size_t> gamma;
    for (std::size_t i = 0; i < l.proper.size(); ++i)
        if (l.q_leq(q, l.proper[i].second)) gamma.push_back(i);
    if (gamma.empty()) return {Interpretation::Outcome::bottom, {}};
    Interpretation out;
    for (std::size_t a : gamma) {
        bool keep = true;
        for (std::size_t b : gamma)
            if (b != a && l.pair_leq(a, b)) keep = false;
        if (keep) out.elements.push_back(l.proper[a]);
    }
    return out;
}

inline Interpretation interpret_observation_p(const InferenceLattice& l, const std::string& p) {
    if (!l.p_elements.empty() &&
        std::find(l.p_elements.begin(), l.p_elements.end(), p) == l.p_elements.end())
        fail(errc::unknown_element, "unknown observation: " + p);
    if (std::find(l.p_bottom_designated.begin(), l.p_bottom_designated.end(), p) !=
        l.p_bottom_designated.end())
        return {Interpretation::Outcome::bottom, {}};
    std::vector<std::size_t> sigma;
    for (std::size_t i = 0; i < l.proper.size(); ++i)
        if (l.p_leq(p, l.proper[i].first)) sigma.push_back(i);
    if (sigma.empty()) return {Interpretation::Outcome::top, {}};
    Interpretation out;
    for (std::size_t a : sigma) {
        bool keep = true;
        for (std::size_t b : sigma)
            if (b != a && l.pair_leq(b, a)) keep = false;
        if (keep) out.elements.push_back(l.proper[a]);
    }
    return out;
}

// canonical handle for a subset observation: ids joined with "+", "0" for the empty set
inline std::string subset_handle(const Universe& u, const Bits& b) {
    if (b.none()) return "0";
    std::string s;
    for (const auto& id : u.ids_of(b)) {
        if (!s.empty()) s += "+";
        s += id;
    }
    return s;
}

inline Bits parse_subset_handle(const Universe& u, const std::string& handle) {
    Bits b(u.size());
    if (handle == "0") return b;
    std::size_t start = 0;
    while (start <= handle.size()) {
        std::size_t end = handle.find('+', start);
        if (end == std::string::npos) end = handle.size();
        std::string id = handle.substr(start, end - start);
        if (!u.contains(id)) fail(errc::unknown_element, "unknown observation member: " + id);
        b.set(u.index(id));
        start = end + 1;
        if (end == handle.size()) break;
    }
    return b;
}

// P_R viewed as an inference lattice over the powerset orders, comparator form
inline InferenceLattice galois_as_inference_lattice(const Relation& r) {
    r.require_nonvoid();
    InferenceLattice l;
    Universe xu = r.individuals(), yu = r.attributes();
    l.p_leq = [xu](const std::string& a, const std::string& b) {
        return parse_subset_handle(xu, a).is_subset_of(parse_subset_handle(xu, b));
    };
    l.q_leq = [yu](const std::string& a, const std::string& b) {
        return parse_subset_handle(yu, a).is_subset_of(parse_subset_handle(yu, b));
    };
    for (const auto& e : doubly_labeled_poset(r).elements)
        l.proper.emplace_back(subset_handle(xu, e.sigma), subset_handle(yu, e.gamma));
    l.q_top_designated.push_back("0");
    l.p_bottom_designated.push_back("0");
    return l;
}

}  // namespace dowker

#endif
