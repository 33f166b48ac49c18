#ifndef DOWKER_MORPHISM_HPP
#define DOWKER_MORPHISM_HPP

#include "homology.hpp"

namespace dowker {

struct RelationMorphism {
    Relation domain, codomain;
    std::unordered_map<std::string, std::string> fx, fy;

    std::size_t map_x(std::size_t x) const {
        return codomain.individuals().index(fx.at(domain.individuals().id(x)));
    }
    std::size_t map_y(std::size_t y) const {
        return codomain.attributes().index(fy.at(domain.attributes().id(y)));
    }
    Bits image_x(const Bits& sigma) const {
        Bits out(codomain.nx());
        for (auto x = sigma.find_first(); x != Bits::npos; x = sigma.find_next(x))
            out.set(map_x(x));
        return out;
    }
    Bits image_y(const Bits& gamma) const {
        Bits out(codomain.ny());
        for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y))
            out.set(map_y(y));
        return out;
    }
};

inline std::pair<bool, std::vector<std::string>> validate_morphism(const RelationMorphism& m) {
    std::vector<std::string> violations;
    for (const auto& xid : m.domain.individuals().ids()) {
        auto it = m.fx.find(xid);
        if (it == m.fx.end()) fail(errc::unknown_id, "fx undefined on " + xid);
        if (!m.codomain.individuals().contains(it->second))
            fail(errc::unknown_id, "fx image unknown: " + it->second);
    }
    for (const auto& yid : m.domain.attributes().ids()) {
        auto it = m.fy.find(yid);
        if (it == m.fy.end()) fail(errc::unknown_id, "fy undefined on " + yid);
        if (!m.codomain.attributes().contains(it->second))
            fail(errc::unknown_id, "fy image unknown: " + it->second);
    }
    for (std::size_t x = 0; x < m.domain.nx(); ++x)
        for (std::size_t y = 0; y < m.domain.ny(); ++y)
            if (m.domain.at(x, y) && !m.codomain.at(m.map_x(x), m.map_y(y)))
                violations.push_back("(" + m.domain.individuals().id(x) + "," +
                                     m.domain.attributes().id(y) + ") has no image pair");
    return {violations.empty(), violations};
}

enum class Tristate { yes, no, undetermined };

inline const char* to_string(Tristate t) {
    switch (t) {
        case Tristate::yes: return "yes";
        case Tristate::no: return "no";
        default: return "undetermined";
    }
}

struct InducedMapsReport {
    bool fx_injective = false, fx_surjective = false;
    bool fy_injective = false, fy_surjective = false;
    bool pair_injective = false, pair_surjective = false;
    bool psi_map_injective = false, psi_map_surjective = false;
    bool phi_map_injective = false, phi_map_surjective = false;
    Tristate mono = Tristate::undetermined, epi = Tristate::undetermined;
};

inline InducedMapsReport induced_simplicial_maps(const RelationMorphism& m,
                                                 std::size_t budget = 1u << 20) {
    auto [ok, violations] = validate_morphism(m);
    if (!ok) fail(errc::invalid_morphism, violations.front());
    m.domain.require_nonvoid();
    m.codomain.require_nonvoid();
    InducedMapsReport rep;

    std::unordered_set<std::size_t> ximg, yimg;
    for (std::size_t x = 0; x < m.domain.nx(); ++x) ximg.insert(m.map_x(x));
    for (std::size_t y = 0; y < m.domain.ny(); ++y) yimg.insert(m.map_y(y));
    rep.fx_injective = ximg.size() == m.domain.nx();
    rep.fx_surjective = ximg.size() == m.codomain.nx();
    rep.fy_injective = yimg.size() == m.domain.ny();
    rep.fy_surjective = yimg.size() == m.codomain.ny();

    std::unordered_set<std::size_t> pimg;
    std::size_t npairs = 0;
    for (std::size_t x = 0; x < m.domain.nx(); ++x)
        for (std::size_t y = 0; y < m.domain.ny(); ++y)
            if (m.domain.at(x, y)) {
                ++npairs;
                pimg.insert(m.map_x(x) * m.codomain.ny() + m.map_y(y));
            }
    rep.pair_injective = pimg.size() == npairs;
    rep.pair_surjective = pimg.size() == m.codomain.pair_count();

    auto simplicial_flags = [&](const SimplicialComplex& dom, const SimplicialComplex& cod,
                                bool on_x, bool& inj, bool& surj) {
        std::unordered_set<Bits, BitsHash> images;
        std::size_t nfaces = 0;
        for (const auto& f : dom.all_faces(budget)) {
            ++nfaces;
            images.insert(on_x ? m.image_x(f) : m.image_y(f));
        }
        inj = images.size() == nfaces;
        surj = true;
        for (const auto& f : cod.all_faces(budget))
            if (!images.count(f)) {
                surj = false;
                break;
            }
    };
    simplicial_flags(dowker_association_complex(m.domain), dowker_association_complex(m.codomain),
                     true, rep.psi_map_injective, rep.psi_map_surjective);
    simplicial_flags(dowker_attribute_complex(m.domain), dowker_attribute_complex(m.codomain),
                     false, rep.phi_map_injective, rep.phi_map_surjective);

    rep.mono = rep.pair_injective ? Tristate::yes : Tristate::no;
    if (rep.pair_surjective)
        rep.epi = Tristate::yes;
    else if (rep.fx_surjective && rep.fy_surjective && m.domain.is_tight())
        rep.epi = Tristate::yes;
    else if (m.codomain.is_tight() && !(rep.fx_surjective && rep.fy_surjective))
        rep.epi = Tristate::no;
    else
        rep.epi = Tristate::undetermined;
    return rep;
}

struct GMorphismPair {
    LabeledPoset domain_poset;       // P_R
    LabeledPoset codomain_poset;     // P_Q
    std::vector<GaloisPair> fxg, fyg;  // image of each P_R element
};

inline GMorphismPair g_morphisms(const RelationMorphism& m) {
    auto [ok, violations] = validate_morphism(m);
    if (!ok) fail(errc::invalid_morphism, violations.front());
    GMorphismPair g;
    g.domain_poset = doubly_labeled_poset(m.domain);
    g.codomain_poset = doubly_labeled_poset(m.codomain);
    if (g.domain_poset.elements.empty() || g.codomain_poset.elements.empty())
        fail(errc::invalid_morphism, "g_morphisms needs nonvoid posets");
    for (const auto& p : g.domain_poset.elements) {
        Bits sx = m.codomain.psi(m.image_y(p.gamma));
        g.fxg.push_back({sx, m.codomain.phi(sx)});
        Bits gy = m.codomain.phi(m.image_x(p.sigma));
        g.fyg.push_back({m.codomain.psi(gy), gy});
    }
    for (std::size_t i = 0; i < g.fxg.size(); ++i)
        if (!g.fyg[i].sigma.is_subset_of(g.fxg[i].sigma))
            fail(errc::invalid_morphism, "g-morphism comparability violated");
    return g;
}

enum class GWhich { FXG, FYG };

struct GeneratedElement {
    GaloisPair element;
    std::string witness;  // expression over image elements
    std::size_t level = 0;
};

struct LatticeGeneration {
    std::vector<GeneratedElement> reached;
    bool covers_proper = false;  // every element of the codomain's proper poset reached
};

// close the g-morphism image under the codomain lattice operations
inline LatticeGeneration lattice_generate_from_image(const RelationMorphism& m, GWhich which) {
    InducedMapsReport rep = induced_simplicial_maps(m);
    if (!rep.pair_surjective) fail(errc::not_surjective, "morphism is not pair surjective");
    if (!m.domain.is_tight() || !m.codomain.is_tight())
        fail(errc::not_tight, "lattice generation needs tight relations");
    GMorphismPair g = g_morphisms(m);
    GaloisLattice lat(m.codomain);
    const auto& img = which == GWhich::FXG ? g.fxg : g.fyg;

    auto name = [&](const GaloisPair& p) {
        std::string s = "(";
        for (const auto& id : m.codomain.individuals().ids_of(p.sigma)) s += id;
        s += ",";
        for (const auto& id : m.codomain.attributes().ids_of(p.gamma)) s += id;
        return s + ")";
    };

    std::unordered_map<std::string, std::size_t> seen;  // sigma key -> reached index
    LatticeGeneration out;
    auto push = [&](const GaloisPair& p, const std::string& w, std::size_t lvl) {
        auto key = bits_key(p.sigma);
        if (seen.count(key)) return false;
        seen.emplace(key, out.reached.size());
        out.reached.push_back({p, w, lvl});
        return true;
    };
    for (const auto& p : img) push(p, name(p), 0);

    bool grew = true;
    for (std::size_t lvl = 1; grew; ++lvl) {
        grew = false;
        std::size_t cur = out.reached.size();
        for (std::size_t i = 0; i < cur; ++i)
            for (std::size_t j = i + 1; j < cur; ++j) {
                std::size_t a = lat.find(out.reached[i].element.sigma);
                std::size_t b = lat.find(out.reached[j].element.sigma);
                const auto& wa = out.reached[i].witness;
                const auto& wb = out.reached[j].witness;
                std::size_t mt = lat.meet(a, b), jn = lat.join(a, b);
                grew |= push(lat.elements()[mt], "(" + wa + " ^ " + wb + ")", lvl);
                grew |= push(lat.elements()[jn], "(" + wa + " v " + wb + ")", lvl);
            }
    }
    out.covers_proper = true;
    for (const auto& q : g.codomain_poset.elements)
        if (!seen.count(bits_key(q.sigma))) out.covers_proper = false;
    return out;
}

}  // namespace dowker

#endif
