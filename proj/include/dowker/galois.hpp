#ifndef DOWKER_GALOIS_HPP
#define DOWKER_GALOIS_HPP

#include <functional>
#include <map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "complex.hpp"

namespace dowker {

using BigInt = boost::multiprecision::cpp_int;

// finite poset given extensionally; chains, covers, lengths
class Poset {
public:
    Poset() = default;
    Poset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) : n_(n) {
        le_.assign(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) le_[i][j] = leq(i, j) ? 1 : 0;
        covers_.assign(n, {});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !le_[i][j]) continue;
                bool cover = true;
                for (std::size_t k = 0; k < n && cover; ++k)
                    if (k != i && k != j && le_[i][k] && le_[k][j]) cover = false;
                if (cover) covers_[i].push_back(j);
            }
    }

    std::size_t size() const { return n_; }
    bool leq(std::size_t i, std::size_t j) const { return le_[i][j] != 0; }
    const std::vector<std::vector<std::size_t>>& covers_up() const { return covers_; }

    std::vector<std::size_t> minimal_elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < n_ && minimal; ++j)
                if (j != i && le_[j][i]) minimal = false;
            if (minimal) out.push_back(i);
        }
        return out;
    }
    std::vector<std::size_t> maximal_elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < n_ && maximal; ++j)
                if (j != i && le_[i][j]) maximal = false;
            if (maximal) out.push_back(i);
        }
        return out;
    }

    // longest chain length in edges; -1 for the empty poset
    int length() const {
        if (n_ == 0) return -1;
        std::vector<int> depth(n_, -1);
        std::function<int(std::size_t)> rec = [&](std::size_t v) -> int {
            if (depth[v] >= 0) return depth[v];
            int best = 0;
            for (std::size_t w : covers_[v]) best = std::max(best, 1 + rec(w));
            return depth[v] = best;
        };
        int best = 0;
        for (std::size_t v = 0; v < n_; ++v) best = std::max(best, rec(v));
        return best;
    }

    std::vector<std::vector<std::size_t>> maximal_chains(std::size_t cap = 1u << 20,
                                                         std::size_t min_length = 0) const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> chain;
        std::function<void(std::size_t)> rec = [&](std::size_t v) {
            chain.push_back(v);
            if (covers_[v].empty()) {
                if (chain.size() >= min_length + 1) {
                    if (out.size() >= cap) fail(errc::cap_exceeded, "too many maximal chains");
                    out.push_back(chain);
                }
            } else {
                for (std::size_t w : covers_[v]) rec(w);
            }
            chain.pop_back();
        };
        for (std::size_t v : minimal_elements()) rec(v);
        return out;
    }

    BigInt count_maximal_chains(std::size_t min_length = 0) const {
        if (n_ == 0) return 0;
        // cnt[v][l]: cover paths from a minimal element to v with l edges
        std::vector<std::vector<BigInt>> cnt(n_, std::vector<BigInt>(n_ + 1, 0));
        std::vector<std::size_t> order = topo_order();
        for (std::size_t v : minimal_elements()) cnt[v][0] = 1;
        for (std::size_t v : order)
            for (std::size_t w : covers_[v])
                for (std::size_t l = 0; l < n_; ++l)
                    if (cnt[v][l] != 0) cnt[w][l + 1] += cnt[v][l];
        BigInt total = 0;
        for (std::size_t v : maximal_elements())
            for (std::size_t l = min_length; l <= n_; ++l) total += cnt[v][l];
        return total;
    }

private:
    std::vector<std::size_t> topo_order() const {
        std::vector<std::size_t> order;
        std::vector<char> seen(n_, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t v) {
            seen[v] = 1;
            for (std::size_t w : covers_[v])
                if (!seen[w]) rec(w);
            order.push_back(v);
        };
        for (std::size_t v = 0; v < n_; ++v)
            if (!seen[v]) rec(v);
        std::reverse(order.begin(), order.end());
        return order;
    }

    std::size_t n_ = 0;
    std::vector<std::vector<char>> le_;
    std::vector<std::vector<std::size_t>> covers_;
};

struct GaloisPair {
    Bits sigma, gamma;
    bool operator==(const GaloisPair& o) const { return sigma == o.sigma && gamma == o.gamma; }
};

inline std::string bits_key(const Bits& b) {
    std::string s;
    boost::to_string(b, s);
    return s;
}

// all pairs (psi(gamma), gamma) with gamma closed, extremes included, canonically sorted
inline std::vector<GaloisPair> closure_pairs(const Relation& r) {
    r.require_nonvoid();
    std::map<std::string, GaloisPair> seen;
    auto add = [&](const Bits& sigma) {
        GaloisPair p{sigma, r.phi(sigma)};
        p.sigma = r.psi(p.gamma);
        seen.emplace(bits_key(p.sigma), p);
    };
    add(full_bits(r.nx()));
    add(r.psi(full_bits(r.ny())));
    for (std::size_t y = 0; y < r.ny(); ++y) add(r.col(y));
    for (std::size_t x = 0; x < r.nx(); ++x) add(r.psi(r.row(x)));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<GaloisPair> cur;
        for (const auto& [k, p] : seen) cur.push_back(p);
        std::size_t before = seen.size();
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                add(cur[i].sigma & cur[j].sigma);                      // meet
                add(r.psi(cur[i].gamma & cur[j].gamma));               // join
            }
        changed = seen.size() != before;
    }
    std::vector<GaloisPair> out;
    for (const auto& [k, p] : seen) out.push_back(p);
    std::sort(out.begin(), out.end(), [](const GaloisPair& a, const GaloisPair& b) {
        if (a.sigma.count() != b.sigma.count()) return a.sigma.count() < b.sigma.count();
        return bits_key(a.sigma) < bits_key(b.sigma);
    });
    return out;
}

// the doubly labeled poset: closure pairs with both labels nonempty
struct LabeledPoset {
    std::vector<GaloisPair> elements;
    Poset poset;  // order by sigma containment

    static LabeledPoset of(const std::vector<GaloisPair>& pairs) {
        LabeledPoset p;
        for (const auto& e : pairs)
            if (e.sigma.any() && e.gamma.any()) p.elements.push_back(e);
        p.poset = Poset(p.elements.size(), [&](std::size_t i, std::size_t j) {
            return p.elements[i].sigma.is_subset_of(p.elements[j].sigma);
        });
        return p;
    }
};

inline LabeledPoset doubly_labeled_poset(const Relation& r) {
    return LabeledPoset::of(closure_pairs(r));
}

// the Galois lattice: every closure pair, with the extremes adjoined when missing
class GaloisLattice {
public:
    explicit GaloisLattice(const Relation& r) : r_(r), elements_(closure_pairs(r)) {
        poset_ = Poset(elements_.size(), [&](std::size_t i, std::size_t j) {
            return elements_[i].sigma.is_subset_of(elements_[j].sigma);
        });
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            index_.emplace(bits_key(elements_[i].sigma), i);
            if (elements_[i].sigma == r.psi(full_bits(r.ny()))) bottom_ = i;
            if (elements_[i].sigma == full_bits(r.nx())) top_ = i;
        }
    }

    const Relation& relation() const { return r_; }
    const std::vector<GaloisPair>& elements() const { return elements_; }
    const Poset& poset() const { return poset_; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    bool bottom_adjoined() const { return elements_[bottom_].sigma.none(); }
    bool top_adjoined() const { return elements_[top_].gamma.none(); }

    std::vector<std::size_t> proper() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (elements_[i].sigma.any() && elements_[i].gamma.any()) out.push_back(i);
        return out;
    }

    std::size_t find(const Bits& sigma) const {
        auto it = index_.find(bits_key(sigma));
        if (it == index_.end()) fail(errc::unknown_element, "no lattice element for sigma");
        return it->second;
    }

    std::size_t meet(std::size_t i, std::size_t j) const {
        return find(elements_[i].sigma & elements_[j].sigma);
    }
    std::size_t join(std::size_t i, std::size_t j) const {
        return find(r_.psi(elements_[i].gamma & elements_[j].gamma));
    }

    int length() const { return poset_.length(); }

private:
    Relation r_;
    std::vector<GaloisPair> elements_;
    Poset poset_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t bottom_ = 0, top_ = 0;
};

// release order in which nothing is inferable from its predecessors
inline bool is_informative(const Relation& r, const std::vector<std::string>& seq) {
    r.require_nonvoid();
    Bits released(r.ny());
    for (const auto& yid : seq) {
        std::size_t y = r.attributes().index(yid);
        if (r.attribute_closure(released).test(y)) return false;
        released.set(y);
    }
    return true;
}

// Lemma-style chain as descending lattice elements, top first
using ChainPairs = std::vector<GaloisPair>;

inline std::vector<std::vector<std::string>> iars_from_chain(const Relation& r,
                                                             const ChainPairs& chain,
                                                             bool enumerate_all = false,
                                                             std::size_t cap = 1u << 12) {
    if (chain.size() < 2) fail(errc::not_maximal, "chain must descend from the top element");
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> seq;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == chain.size()) {
            if (out.size() >= cap) fail(errc::cap_exceeded, "too many release sequences");
            out.push_back(seq);
            return;
        }
        Bits fresh = chain[i].gamma - chain[i - 1].gamma;
        if (fresh.none()) fail(errc::not_maximal, "chain labels do not descend");
        for (auto y = fresh.find_first(); y != Bits::npos; y = fresh.find_next(y)) {
            seq.push_back(r.attributes().id(y));
            rec(i + 1);
            seq.pop_back();
            if (!enumerate_all) return;  // canonical pick: lexicographically least index
        }
    };
    rec(1);
    return out;
}

inline ChainPairs chain_from_iars(const Relation& r, const std::vector<std::string>& seq) {
    if (!is_informative(r, seq)) fail(errc::not_informative, "sequence is not informative");
    ChainPairs chain;
    Bits released(r.ny());
    chain.push_back({full_bits(r.nx()), r.phi(full_bits(r.nx()))});
    for (const auto& yid : seq) {
        released.set(r.attributes().index(yid));
        Bits gamma = r.attribute_closure(released);
        chain.push_back({r.psi(gamma), gamma});
    }
    return chain;
}

inline bool is_minimally_identifying(const Relation& r, const Bits& gamma) {
    r.require_nonvoid();
    if (gamma.none()) return false;
    Bits sigma = r.psi(gamma);
    for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y)) {
        Bits sub = gamma;
        sub.reset(y);
        if (r.psi(sub) == sigma) return false;
    }
    return true;
}

// every ordering of gamma is informative; sphere test beyond the factorial cap
inline bool is_isotropic(const Relation& r, const Bits& gamma, std::size_t factorial_cap = 7) {
    r.require_nonvoid();
    if (gamma.none()) return false;
    auto by_orderings = [&]() {
        std::vector<std::size_t> idx = bit_indices(gamma);
        std::sort(idx.begin(), idx.end());
        do {
            Bits released(r.ny());
            for (std::size_t y : idx) {
                if (r.attribute_closure(released).test(y)) return false;
                released.set(y);
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        return true;
    };
    auto by_structure = [&]() {
        if (r.in_phi_complex(gamma)) {
            if (gamma.count() == 1)
                return !r.attribute_closure(Bits(r.ny())).test(gamma.find_first());
            Bits sigma = r.psi(gamma);
            LinkRelation q = restricted_link_relation(r, sigma, gamma);
            SimplicialComplex phi_q = q.attribute_complex();
            if (phi_q.is_void() || phi_q.is_empty_complex()) return false;
            std::vector<std::string> ids;
            for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y))
                ids.push_back(r.attributes().id(y));
            // compare against the boundary of gamma on the link's attribute universe
            SimplicialComplex target = boundary_complex(q.relation.attributes());
            return phi_q == target && q.relation.attributes().ids() == ids;
        }
        // outside the complex: isotropic exactly when gamma is a minimal nonface
        for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y)) {
            Bits sub = gamma;
            sub.reset(y);
            if (!r.in_phi_complex(sub)) return false;
        }
        return true;
    };
    if (gamma.count() <= factorial_cap) {
        bool a = by_orderings();
        bool b = by_structure();
        if (a != b) fail(errc::precondition_violated, "isotropy tests disagree");
        return a;
    }
    return by_structure();
}

inline int r_fast(const Relation& r, const Bits& sigma) {
    auto res = min_identifying_set(r, sigma);
    if (!res.best) fail(errc::cap_exceeded, "r_fast search truncated");
    return static_cast<int>(res.best->count());
}

// slow release length from the link poset of sigma
inline int r_slow(const Relation& r, const Bits& sigma) {
    r.require_nonvoid();
    Bits gamma = r.phi(sigma);
    if (r.psi(gamma) != sigma) fail(errc::not_stable, "sigma is not inference stable");
    // only the empty sequence keeps psi at X, so the top element always gets 0
    if (sigma == full_bits(r.nx())) return 0;
    LinkRelation q = conditional_association_relation(r, sigma);
    int lpq = -1;
    if (q.override_ == ComplexOverride::NONE && !q.relation.is_void())
        lpq = doubly_labeled_poset(q.relation).poset.length();
    bool x_in_psi = r.in_psi_complex(full_bits(r.nx()));
    return x_in_psi ? lpq + 1 : lpq + 2;
}

// isotropic attribute sets grouped by size
inline std::map<std::size_t, std::vector<Bits>> isotropic_sets(const Relation& r,
                                                               std::size_t max_size,
                                                               std::size_t cap = 1u << 20) {
    r.require_nonvoid();
    std::map<std::size_t, std::vector<Bits>> out;
    std::size_t visited = 0;
    std::function<void(Bits, std::size_t)> rec = [&](Bits cur, std::size_t next) {
        if (++visited > cap) fail(errc::cap_exceeded, "isotropic enumeration too large");
        if (cur.any() && is_isotropic(r, cur)) out[cur.count()].push_back(cur);
        if (cur.count() >= max_size) return;
        for (std::size_t y = next; y < r.ny(); ++y) {
            cur.set(y);
            rec(cur, y + 1);
            cur.reset(y);
        }
    };
    rec(Bits(r.ny()), 0);
    return out;
}

// longest informative release sequence, built along a longest lattice chain
inline std::pair<int, std::vector<std::string>> longest_iars(const Relation& r) {
    GaloisLattice lat(r);
    int len = lat.length();
    if (len <= 0) return {0, {}};
    // lexicographic-deterministic longest path from the top downward in the dual order
    const Poset& p = lat.poset();
    std::vector<int> down(p.size(), -1);  // longest descending chain below i
    std::vector<std::vector<std::size_t>> covers_down(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j : p.covers_up()[i]) covers_down[j].push_back(i);
    std::function<int(std::size_t)> depth = [&](std::size_t v) -> int {
        if (down[v] >= 0) return down[v];
        int best = 0;
        for (std::size_t w : covers_down[v]) best = std::max(best, 1 + depth(w));
        return down[v] = best;
    };
    ChainPairs chain;
    std::size_t cur = lat.top();
    chain.push_back(lat.elements()[cur]);
    while (depth(cur) > 0) {
        std::size_t pick = static_cast<std::size_t>(-1);
        for (std::size_t w : covers_down[cur])
            if (depth(w) == depth(cur) - 1 && (pick == static_cast<std::size_t>(-1) || w < pick))
                pick = w;
        cur = pick;
        chain.push_back(lat.elements()[cur]);
    }
    auto seqs = iars_from_chain(r, chain);
    return {len, seqs.front()};
}

// informative sequences drawn from Y_x until stuck; for identifiable x they end in psi = {x}
inline std::pair<int, std::vector<std::vector<std::string>>> identifying_iars(
    const Relation& r, const std::string& x_id, std::size_t cap = 1u << 14) {
    r.require_nonvoid();
    std::size_t x = r.individuals().index(x_id);
    const Bits& yx = r.row(x);
    std::vector<std::vector<std::string>> all;
    std::vector<std::string> seq;
    Bits released(r.ny());
    std::function<void()> rec = [&]() {
        Bits closed = r.attribute_closure(released);
        Bits fresh = yx - closed;
        if (fresh.none()) {
            if (all.size() >= cap) fail(errc::cap_exceeded, "too many identifying sequences");
            all.push_back(seq);
            return;
        }
        for (auto y = fresh.find_first(); y != Bits::npos; y = fresh.find_next(y)) {
            released.set(y);
            seq.push_back(r.attributes().id(y));
            rec();
            seq.pop_back();
            released.reset(y);
        }
    };
    rec();
    std::size_t best = 0;
    for (const auto& s : all) best = std::max(best, s.size());
    std::vector<std::vector<std::string>> longest;
    for (const auto& s : all)
        if (s.size() == best) longest.push_back(s);
    return {static_cast<int>(best), longest};
}

}  // namespace dowker

#endif
