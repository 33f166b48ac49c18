#ifndef DOWKER_COMPLEX_HPP
#define DOWKER_COMPLEX_HPP

#include <functional>
#include <unordered_set>

#include "relation.hpp"

namespace dowker {

// abstract simplicial complex stored as the antichain of maximal simplices;
// the empty complex {0} and the void complex are distinct states
class SimplicialComplex {
public:
    static SimplicialComplex make_void(Universe u = Universe()) {
        SimplicialComplex s;
        s.universe_ = std::move(u);
        s.void_ = true;
        return s;
    }

    static SimplicialComplex from_generators(Universe u, const std::vector<Bits>& gens) {
        SimplicialComplex s;
        s.universe_ = std::move(u);
        s.maximal_ = antichain(gens, s.universe_.size());
        return s;
    }

    static SimplicialComplex empty_complex(Universe u = Universe()) {
        return from_generators(std::move(u), {});
    }

    bool is_void() const { return void_; }
    bool is_empty_complex() const { return !void_ && maximal_.size() == 1 && maximal_[0].none(); }
    const Universe& universe() const { return universe_; }
    const std::vector<Bits>& maximal_simplices() const { return maximal_; }
    std::size_t dimension_bound() const {
        std::size_t d = 0;
        for (const auto& m : maximal_) d = std::max(d, static_cast<std::size_t>(m.count()));
        return d;  // vertex count of the largest facet
    }

    bool contains(const Bits& tau) const {
        if (void_) return false;
        for (const auto& m : maximal_)
            if (tau.is_subset_of(m)) return true;
        return false;
    }

    // every face, dimension by dimension; guarded by a face budget
    std::vector<Bits> all_faces(std::size_t budget = 1u << 22) const {
        if (void_) return {};
        std::unordered_set<Bits, BitsHash> seen;
        std::vector<Bits> out;
        for (const auto& m : maximal_) {
            for_each_subset(m, [&](const Bits& f) {
                if (seen.insert(f).second) {
                    out.push_back(f);
                    if (out.size() > budget) fail(errc::too_large, "face budget exceeded");
                }
            });
        }
        return out;
    }

    // simplices properly contained in exactly one maximal simplex
    std::vector<Bits> free_faces(std::size_t budget = 1u << 22) const {
        std::vector<Bits> out;
        if (void_) return out;
        for (const Bits& f : all_faces(budget)) {
            std::size_t in = 0;
            bool proper = false;
            for (const auto& m : maximal_) {
                if (f.is_subset_of(m)) {
                    ++in;
                    if (f != m) proper = true;
                }
            }
            if (in == 1 && proper) out.push_back(f);
        }
        return out;
    }

    bool operator==(const SimplicialComplex& o) const {
        if (void_ != o.void_) return false;
        if (!(universe_ == o.universe_)) return false;
        auto key = [](const Bits& b) {
            std::string s;
            boost::to_string(b, s);
            return s;
        };
        std::vector<std::string> a, b;
        for (const auto& m : maximal_) a.push_back(key(m));
        for (const auto& m : o.maximal_) b.push_back(key(m));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    static std::vector<Bits> antichain(const std::vector<Bits>& gens, std::size_t width) {
        std::vector<Bits> out;
        for (const auto& g : gens) {
            bool dominated = false;
            for (const auto& h : gens)
                if (&g != &h && g.is_subset_of(h) && g != h) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        }
        if (out.empty()) out.push_back(Bits(width));
        return out;
    }

private:
    Universe universe_;
    std::vector<Bits> maximal_;
    bool void_ = false;
};

inline SimplicialComplex dowker_attribute_complex(const Relation& r) {
    if (r.is_void()) return SimplicialComplex::make_void(r.attributes());
    std::vector<Bits> gens;
    for (std::size_t x = 0; x < r.nx(); ++x) gens.push_back(r.row(x));
    return SimplicialComplex::from_generators(r.attributes(), gens);
}

inline SimplicialComplex dowker_association_complex(const Relation& r) {
    if (r.is_void()) return SimplicialComplex::make_void(r.individuals());
    std::vector<Bits> gens;
    for (std::size_t y = 0; y < r.ny(); ++y) gens.push_back(r.col(y));
    return SimplicialComplex::from_generators(r.individuals(), gens);
}

inline SimplicialComplex link(const SimplicialComplex& s, const Bits& tau) {
    if (s.is_void() || !s.contains(tau)) return SimplicialComplex::make_void(s.universe());
    std::vector<Bits> gens;
    for (const auto& m : s.maximal_simplices())
        if (tau.is_subset_of(m)) gens.push_back(m - tau);
    return SimplicialComplex::from_generators(s.universe(), gens);
}

inline SimplicialComplex deletion(const SimplicialComplex& s, const Bits& tau) {
    if (s.is_void()) return s;
    std::vector<Bits> gens;
    for (const auto& m : s.maximal_simplices()) gens.push_back(m - tau);
    return SimplicialComplex::from_generators(s.universe(), gens);
}

inline SimplicialComplex closed_star(const SimplicialComplex& s, const Bits& tau) {
    if (s.is_void() || !s.contains(tau)) return SimplicialComplex::make_void(s.universe());
    std::vector<Bits> gens;
    for (const auto& m : s.maximal_simplices())
        if (tau.is_subset_of(m)) gens.push_back(m);
    return SimplicialComplex::from_generators(s.universe(), gens);
}

inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& id : a.universe().ids())
        if (b.universe().contains(id)) fail(errc::universe_overlap, "join: shared vertex " + id);
    std::vector<std::string> ids = a.universe().ids();
    for (const auto& id : b.universe().ids()) ids.push_back(id);
    Universe u(ids);
    if (a.is_void() || b.is_void()) return SimplicialComplex::make_void(u);
    std::size_t na = a.universe().size();
    std::vector<Bits> gens;
    for (const auto& ma : a.maximal_simplices())
        for (const auto& mb : b.maximal_simplices()) {
            Bits g(u.size());
            for (auto i = ma.find_first(); i != Bits::npos; i = ma.find_next(i)) g.set(i);
            for (auto i = mb.find_first(); i != Bits::npos; i = mb.find_next(i)) g.set(na + i);
            gens.push_back(g);
        }
    return SimplicialComplex::from_generators(u, gens);
}

// all proper subsets of the vertex set
inline SimplicialComplex boundary_complex(const Universe& u) {
    if (u.size() == 0) return SimplicialComplex::make_void(u);
    std::vector<Bits> gens;
    for (std::size_t v = 0; v < u.size(); ++v) {
        Bits g = full_bits(u.size());
        g.reset(v);
        gens.push_back(g);
    }
    return SimplicialComplex::from_generators(u, gens);
}

// minimal subsets of the universe that are not simplices
inline std::vector<Bits> minimal_nonfaces(const SimplicialComplex& s, std::size_t max_size = 16) {
    if (s.is_void()) fail(errc::precondition_violated, "minimal_nonfaces of the void complex");
    std::size_t n = s.universe().size();
    if (n > 20) fail(errc::too_large, "minimal_nonfaces universe too large");
    std::vector<Bits> out;
    std::function<bool(const Bits&)> is_min = [&](const Bits& t) {
        for (auto v = t.find_first(); v != Bits::npos; v = t.find_next(v)) {
            Bits sub = t;
            sub.reset(v);
            if (!s.contains(sub)) return false;
        }
        return true;
    };
    for_each_subset(full_bits(n), [&](const Bits& t) {
        if (t.count() <= max_size && !s.contains(t) && is_min(t)) out.push_back(t);
    });
    return out;
}

// remove every vertex that lies in all maximal simplices, when there are at least two
inline SimplicialComplex strip_cone_apexes(const SimplicialComplex& s) {
    if (s.is_void() || s.maximal_simplices().size() <= 1) return s;
    Bits apexes = s.maximal_simplices().front();
    for (const auto& m : s.maximal_simplices()) apexes &= m;
    if (apexes.none()) return s;
    std::vector<std::string> keep_ids;
    std::vector<std::size_t> keep_idx;
    for (std::size_t v = 0; v < s.universe().size(); ++v)
        if (!apexes.test(v)) {
            keep_ids.push_back(s.universe().id(v));
            keep_idx.push_back(v);
        }
    Universe u(keep_ids);
    std::vector<Bits> gens;
    for (const auto& m : s.maximal_simplices()) {
        Bits g(u.size());
        for (std::size_t j = 0; j < keep_idx.size(); ++j)
            if (m.test(keep_idx[j])) g.set(j);
        gens.push_back(g);
    }
    return SimplicialComplex::from_generators(u, gens);
}

// link and restricted-link relations; the override distinguishes the definitions' special cases
enum class ComplexOverride { NONE, EMPTY, VOID };

struct LinkRelation {
    Relation relation;
    ComplexOverride override_ = ComplexOverride::NONE;
    std::string provenance;

    SimplicialComplex attribute_complex() const {
        if (override_ == ComplexOverride::VOID) return SimplicialComplex::make_void();
        if (override_ == ComplexOverride::EMPTY) return SimplicialComplex::empty_complex();
        return dowker_attribute_complex(relation);
    }
    SimplicialComplex association_complex() const {
        if (override_ == ComplexOverride::VOID) return SimplicialComplex::make_void();
        if (override_ == ComplexOverride::EMPTY) return SimplicialComplex::empty_complex();
        return dowker_association_complex(relation);
    }
};

inline Relation restrict_relation(const Relation& r, const Bits& xs, const Bits& ys) {
    std::vector<std::string> xi, yi;
    for (auto x = xs.find_first(); x != Bits::npos; x = xs.find_next(x))
        xi.push_back(r.individuals().id(x));
    for (auto y = ys.find_first(); y != Bits::npos; y = ys.find_next(y))
        yi.push_back(r.attributes().id(y));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& x : xi)
        for (const auto& y : yi)
            if (r.at(r.individuals().index(x), r.attributes().index(y))) pairs.emplace_back(x, y);
    return Relation::build(pairs, xi, yi, true);
}

// Q models Lk(Phi_R, gamma): rows psi(gamma), columns the attributes those rows still share
inline LinkRelation conditional_attribute_relation(const Relation& r, const Bits& gamma,
                                                   bool keep_blank_columns = false) {
    r.require_nonvoid();
    LinkRelation lr;
    lr.provenance = "conditional_attribute_relation";
    if (!r.in_phi_complex(gamma)) {
        lr.override_ = ComplexOverride::VOID;
        lr.relation = restrict_relation(r, Bits(r.nx()), Bits(r.ny()));
        return lr;
    }
    Bits sigma = r.psi(gamma);
    Bits ytil(r.ny());
    if (keep_blank_columns) {
        ytil = full_bits(r.ny()) - gamma;
    } else {
        for (auto x = sigma.find_first(); x != Bits::npos; x = sigma.find_next(x))
            ytil |= r.row(x);
        ytil -= gamma;
    }
    if (ytil.none()) {
        lr.override_ = ComplexOverride::EMPTY;
        lr.relation = restrict_relation(r, sigma, ytil);
        return lr;
    }
    lr.relation = restrict_relation(r, sigma, ytil);
    return lr;
}

// Q models Lk(Psi_R, sigma): columns phi(sigma), rows the other individuals carrying them
inline LinkRelation conditional_association_relation(const Relation& r, const Bits& sigma) {
    r.require_nonvoid();
    LinkRelation lr;
    lr.provenance = "conditional_association_relation";
    if (!r.in_psi_complex(sigma)) {
        lr.override_ = ComplexOverride::VOID;
        lr.relation = restrict_relation(r, Bits(r.nx()), Bits(r.ny()));
        return lr;
    }
    Bits gamma = r.phi(sigma);
    Bits xtil(r.nx());
    for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y)) xtil |= r.col(y);
    xtil -= sigma;
    if (xtil.none()) {
        lr.override_ = ComplexOverride::EMPTY;
        lr.relation = restrict_relation(r, xtil, gamma);
        return lr;
    }
    lr.relation = restrict_relation(r, xtil, gamma);
    return lr;
}

// Q(sigma, gamma): the link of sigma restricted to the attribute set gamma
inline LinkRelation restricted_link_relation(const Relation& r, const Bits& sigma,
                                             const Bits& gamma) {
    r.require_nonvoid();
    if (!r.in_psi_complex(sigma) || !gamma.is_subset_of(r.phi(sigma)))
        fail(errc::precondition_violated, "restricted link needs sigma in Psi_R, gamma in phi(sigma)");
    LinkRelation lr;
    lr.provenance = "restricted_link_relation";
    if (sigma == full_bits(r.nx())) {
        lr.override_ = ComplexOverride::VOID;
        lr.relation = restrict_relation(r, Bits(r.nx()), Bits(r.ny()));
        return lr;
    }
    Bits xtil(r.nx());
    for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y)) xtil |= r.col(y);
    xtil -= sigma;
    if (xtil.none()) {
        lr.override_ = ComplexOverride::EMPTY;
        lr.relation = restrict_relation(r, xtil, gamma);
        return lr;
    }
    lr.relation = restrict_relation(r, xtil, gamma);
    return lr;
}

// drop the columns of gamma; models the deletion dl(Phi_R, gamma)
inline Relation deletion_relation(const Relation& r, const Bits& gamma) {
    r.require_nonvoid();
    return restrict_relation(r, full_bits(r.nx()), full_bits(r.ny()) - gamma);
}

// single-entry additions that make at least one current free face of Phi_R non-free
inline std::vector<std::pair<std::string, std::string>> suggest_disinformation(const Relation& r) {
    r.require_nonvoid();
    auto phi_before = dowker_attribute_complex(r);
    auto before = phi_before.free_faces();
    std::vector<std::pair<std::string, std::string>> out;
    if (before.empty()) return out;
    for (std::size_t x = 0; x < r.nx(); ++x)
        for (std::size_t y = 0; y < r.ny(); ++y) {
            if (r.at(x, y)) continue;
            Relation r2 = r.add_entry(r.individuals().id(x), r.attributes().id(y));
            auto after = dowker_attribute_complex(r2).free_faces();
            for (const auto& f : before) {
                bool generated_by_row = false;
                for (std::size_t xx = 0; xx < r.nx(); ++xx)
                    if (r.row(xx) == f) generated_by_row = true;
                if (generated_by_row) continue;
                if (std::find(after.begin(), after.end(), f) == after.end()) {
                    out.emplace_back(r.individuals().id(x), r.attributes().id(y));
                    goto next_entry;
                }
            }
        next_entry:;
        }
    return out;
}

struct Embedding {
    std::vector<std::pair<std::string, std::string>> vertex_map;
    std::vector<std::pair<std::size_t, std::size_t>> facet_map;  // pattern facet -> host facet
};

// injective vertex map plus injective facet map, consistent with incidence
inline std::vector<Embedding> enumerate_embeddings(const SimplicialComplex& pattern,
                                                   const SimplicialComplex& host,
                                                   std::size_t max_pattern_vertices = 8) {
    if (pattern.is_void() || host.is_void())
        fail(errc::precondition_violated, "embeddings need nonvoid complexes");
    if (pattern.universe().size() > max_pattern_vertices)
        fail(errc::too_large, "pattern too large");
    std::size_t np = pattern.universe().size(), nh = host.universe().size();
    std::vector<Embedding> out;
    if (np > nh) return out;
    const auto& pf = pattern.maximal_simplices();
    const auto& hf = host.maximal_simplices();
    std::vector<std::size_t> vmap(np, static_cast<std::size_t>(-1));
    std::vector<bool> vused(nh, false);
    std::vector<std::size_t> fmap(pf.size(), static_cast<std::size_t>(-1));
    std::vector<bool> fused(hf.size(), false);
    std::function<void(std::size_t)> place_facet;
    std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t)> place_vertices =
        [&](std::size_t fi, std::vector<std::size_t>& verts, std::size_t k) {
            if (k == verts.size()) {
                place_facet(fi + 1);
                return;
            }
            std::size_t pv = verts[k];
            const Bits& target = hf[fmap[fi]];
            if (vmap[pv] != static_cast<std::size_t>(-1)) {
                if (target.test(vmap[pv])) place_vertices(fi, verts, k + 1);
                return;
            }
            for (auto hv = target.find_first(); hv != Bits::npos; hv = target.find_next(hv)) {
                if (vused[hv]) continue;
                vmap[pv] = hv;
                vused[hv] = true;
                place_vertices(fi, verts, k + 1);
                vused[hv] = false;
                vmap[pv] = static_cast<std::size_t>(-1);
            }
        };
    place_facet = [&](std::size_t fi) {
        if (fi == pf.size()) {
            Embedding e;
            for (std::size_t v = 0; v < np; ++v)
                if (vmap[v] != static_cast<std::size_t>(-1))
                    e.vertex_map.emplace_back(pattern.universe().id(v),
                                              host.universe().id(vmap[v]));
            for (std::size_t f = 0; f < pf.size(); ++f) e.facet_map.emplace_back(f, fmap[f]);
            out.push_back(e);
            return;
        }
        auto verts = bit_indices(pf[fi]);
        for (std::size_t h = 0; h < hf.size(); ++h) {
            if (fused[h] || pf[fi].count() > hf[h].count()) continue;
            fmap[fi] = h;
            fused[h] = true;
            place_vertices(fi, verts, 0);
            fused[h] = false;
            fmap[fi] = static_cast<std::size_t>(-1);
        }
    };
    place_facet(0);
    return out;
}

}  // namespace dowker

#endif
