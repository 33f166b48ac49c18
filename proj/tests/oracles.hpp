#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

#include <random>
#include <set>

#include <dowker/dowker.hpp>

// brute-force reference implementations, kept definitional on purpose
namespace oracles {

using namespace dowker;

inline Bits slow_phi(const Relation& r, const Bits& sigma) {
    Bits out(r.ny());
    for (std::size_t y = 0; y < r.ny(); ++y) {
        bool all = true;
        for (auto x = sigma.find_first(); x != Bits::npos; x = sigma.find_next(x))
            if (!r.at(x, y)) all = false;
        if (all) out.set(y);
    }
    return out;
}

inline Bits slow_psi(const Relation& r, const Bits& gamma) {
    Bits out(r.nx());
    for (std::size_t x = 0; x < r.nx(); ++x) {
        bool all = true;
        for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y))
            if (!r.at(x, y)) all = false;
        if (all) out.set(x);
    }
    return out;
}

inline std::vector<Bits> slow_all_faces(const SimplicialComplex& s) {
    std::set<std::vector<std::size_t>> seen;
    Bits support(s.universe().size());
    for (const auto& m : s.maximal_simplices()) support |= m;
    for_each_subset(support, [&](const Bits& sub) {
        if (s.contains(sub)) seen.insert(bit_indices(sub));
    });
    std::vector<Bits> out;
    for (const auto& idx : seen) {
        Bits b(s.universe().size());
        for (std::size_t i : idx) b.set(i);
        out.push_back(b);
    }
    return out;
}

// proper faces of exactly one maximal simplex; the empty face counts
inline std::vector<Bits> slow_free_faces(const SimplicialComplex& s) {
    std::vector<Bits> out;
    for (const Bits& f : slow_all_faces(s)) {
        std::size_t in = 0;
        bool proper = false;
        for (const auto& m : s.maximal_simplices())
            if (f.is_subset_of(m)) {
                ++in;
                proper = proper || f != m;
            }
        if (in == 1 && proper) out.push_back(f);
    }
    return out;
}

// every closure pair, found by sweeping all attribute subsets
inline std::vector<GaloisPair> slow_closure_pairs(const Relation& r) {
    std::map<std::string, GaloisPair> seen;
    for_each_subset(full_bits(r.ny()), [&](const Bits& g) {
        GaloisPair p{slow_psi(r, g), Bits()};
        p.gamma = slow_phi(r, p.sigma);
        seen.emplace(bits_key(p.sigma), p);
    });
    GaloisPair bottom{slow_psi(r, full_bits(r.ny())), full_bits(r.ny())};
    bottom.gamma = slow_phi(r, bottom.sigma);
    seen.emplace(bits_key(bottom.sigma), bottom);
    std::vector<GaloisPair> out;
    for (const auto& [k, p] : seen) out.push_back(p);
    std::sort(out.begin(), out.end(), [](const GaloisPair& a, const GaloisPair& b) {
        if (a.sigma.count() != b.sigma.count()) return a.sigma.count() < b.sigma.count();
        return bits_key(a.sigma) < bits_key(b.sigma);
    });
    return out;
}

inline std::vector<GaloisPair> slow_proper_pairs(const Relation& r) {
    std::vector<GaloisPair> out;
    for (const auto& p : slow_closure_pairs(r))
        if (p.sigma.any() && p.gamma.any()) out.push_back(p);
    return out;
}

// maximal chains counted by naive DFS over the containment order on sigma labels
inline long slow_count_maximal_chains(const std::vector<GaloisPair>& elems,
                                      std::size_t min_edges = 0) {
    std::size_t n = elems.size();
    auto lt = [&](std::size_t i, std::size_t j) {
        return i != j && elems[i].sigma.is_subset_of(elems[j].sigma);
    };
    auto covers = [&](std::size_t i, std::size_t j) {
        if (!lt(i, j)) return false;
        for (std::size_t k = 0; k < n; ++k)
            if (lt(i, k) && lt(k, j)) return false;
        return true;
    };
    long total = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t edges) {
        bool top = true;
        for (std::size_t w = 0; w < n; ++w)
            if (covers(v, w)) {
                top = false;
                rec(w, edges + 1);
            }
        if (top && edges >= min_edges) ++total;
    };
    for (std::size_t v = 0; v < n; ++v) {
        bool bottom = true;
        for (std::size_t u = 0; u < n; ++u)
            if (lt(u, v)) bottom = false;
        if (bottom) rec(v, 0);
    }
    return total;
}

inline bool slow_informative(const Relation& r, const std::vector<std::size_t>& seq) {
    Bits released(r.ny());
    for (std::size_t y : seq) {
        if (slow_phi(r, slow_psi(r, released)).test(y)) return false;
        released.set(y);
    }
    return true;
}

// all orderings of gamma, checked directly
inline bool slow_isotropic(const Relation& r, const Bits& gamma) {
    if (gamma.none()) return false;
    std::vector<std::size_t> idx = bit_indices(gamma);
    std::sort(idx.begin(), idx.end());
    do {
        if (!slow_informative(r, idx)) return false;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return true;
}

// smallest gamma with psi(gamma) = sigma, by subset sweep over phi(sigma)
inline std::optional<Bits> slow_min_identifying(const Relation& r, const Bits& sigma) {
    Bits pool = slow_phi(r, sigma);
    if (slow_psi(r, pool) != sigma) return std::nullopt;
    std::optional<Bits> best;
    for_each_subset(pool, [&](const Bits& g) {
        if (slow_psi(r, g) == sigma && (!best || g.count() < best->count())) best = g;
    });
    return best;
}

// does some gamma in Y_x minus y, |gamma| <= k, pin x down to X_y
inline bool slow_mininf(const Relation& r, std::size_t x, std::size_t y, std::size_t k) {
    Bits pool = r.row(x);
    pool.reset(y);
    bool found = false;
    for_each_subset(pool, [&](const Bits& g) {
        if (g.count() <= k && slow_psi(r, g).is_subset_of(r.col(y))) found = true;
    });
    return found;
}

inline bool slow_setcover(const std::vector<std::vector<std::string>>& sets,
                          const std::vector<std::string>& universe, std::size_t k) {
    std::size_t m = sets.size();
    for (std::uint64_t code = 0; code < (1ULL << m); ++code) {
        if (static_cast<std::size_t>(__builtin_popcountll(code)) > k) continue;
        std::set<std::string> covered;
        for (std::size_t i = 0; i < m; ++i)
            if (code & (1ULL << i)) covered.insert(sets[i].begin(), sets[i].end());
        bool all = true;
        for (const auto& u : universe) all = all && covered.count(u);
        if (all) return true;
    }
    return false;
}

inline Relation random_relation(std::mt19937& rng, std::size_t max_n, std::size_t max_m,
                                double density = 0.5, bool allow_void = false) {
    std::uniform_int_distribution<std::size_t> dn(allow_void ? 0 : 1, max_n),
        dm(allow_void ? 0 : 1, max_m);
    std::bernoulli_distribution bit(density);
    std::size_t n = dn(rng), m = dm(rng);
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j) ys.push_back("y" + std::to_string(j + 1));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (bit(rng)) pairs.emplace_back(x, y);
    return Relation::build(pairs, xs, ys, true);
}

}  // namespace oracles

#endif
