#ifndef DOWKER_RELATION_HPP
#define DOWKER_RELATION_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <utility>

#include "core.hpp"

namespace dowker {

// finite binary relation on individuals x attributes, stored row- and column-major
class Relation {
public:
    Relation() = default;

    static Relation build(const std::vector<std::pair<std::string, std::string>>& pairs,
                          std::vector<std::string> individuals,
                          std::vector<std::string> attributes,
                          bool allow_void = false) {
        Relation r;
        r.x_ = Universe(std::move(individuals));
        r.y_ = Universe(std::move(attributes));
        if ((r.x_.size() == 0 || r.y_.size() == 0) && !allow_void)
            fail(errc::void_relation, "void relation: empty universe");
        r.rows_.assign(r.x_.size(), Bits(r.y_.size()));
        r.cols_.assign(r.y_.size(), Bits(r.x_.size()));
        for (const auto& [xi, yi] : pairs) {
            std::size_t x = r.x_.index(xi);
            std::size_t y = r.y_.index(yi);
            r.rows_[x].set(y);
            r.cols_[y].set(x);
        }
        return r;
    }

    static Relation from_bits(Universe xs, Universe ys, std::vector<Bits> rows) {
        Relation r;
        r.x_ = std::move(xs);
        r.y_ = std::move(ys);
        r.rows_ = std::move(rows);
        r.cols_.assign(r.y_.size(), Bits(r.x_.size()));
        for (std::size_t x = 0; x < r.rows_.size(); ++x)
            for (auto y = r.rows_[x].find_first(); y != Bits::npos; y = r.rows_[x].find_next(y))
                r.cols_[y].set(x);
        return r;
    }

    const Universe& individuals() const { return x_; }
    const Universe& attributes() const { return y_; }
    std::size_t nx() const { return x_.size(); }
    std::size_t ny() const { return y_.size(); }
    bool is_void() const { return nx() == 0 || ny() == 0; }
    bool is_empty() const {
        for (const auto& row : rows_)
            if (row.any()) return false;
        return true;
    }

    const Bits& row(std::size_t x) const { return rows_.at(x); }  // Y_x
    const Bits& col(std::size_t y) const { return cols_.at(y); }  // X_y
    bool at(std::size_t x, std::size_t y) const { return rows_.at(x).test(y); }
    std::size_t pair_count() const {
        std::size_t n = 0;
        for (const auto& row : rows_) n += row.count();
        return n;
    }

    void require_nonvoid() const {
        if (is_void()) fail(errc::void_relation, "operation requires a nonvoid relation");
    }

    // phi_R(sigma) = intersection of rows over sigma; phi(empty) = Y
    Bits phi(const Bits& sigma) const {
        require_nonvoid();
        Bits out = full_bits(ny());
        for (auto x = sigma.find_first(); x != Bits::npos; x = sigma.find_next(x)) out &= rows_[x];
        return out;
    }
    // psi_R(gamma) = intersection of columns over gamma; psi(empty) = X
    Bits psi(const Bits& gamma) const {
        require_nonvoid();
        Bits out = full_bits(nx());
        for (auto y = gamma.find_first(); y != Bits::npos; y = gamma.find_next(y)) out &= cols_[y];
        return out;
    }

    Bits attribute_closure(const Bits& gamma) const { return phi(psi(gamma)); }
    Bits association_closure(const Bits& sigma) const { return psi(phi(sigma)); }

    bool in_phi_complex(const Bits& gamma) const { return gamma.none() || psi(gamma).any(); }
    bool in_psi_complex(const Bits& sigma) const { return sigma.none() || phi(sigma).any(); }

    // identity of phi.psi on the attribute Dowker complex plus the empty set;
    // checked on the sets Y_x \ {y}, which suffices
    bool preserves_attribute_privacy() const {
        require_nonvoid();
        if (attribute_closure(Bits(ny())).any()) return false;
        for (std::size_t x = 0; x < nx(); ++x) {
            const Bits& yx = rows_[x];
            for (auto y = yx.find_first(); y != Bits::npos; y = yx.find_next(y)) {
                Bits g = yx;
                g.reset(y);
                if (attribute_closure(g) != g) return false;
            }
        }
        return true;
    }

    bool preserves_association_privacy() const {
        require_nonvoid();
        if (association_closure(Bits(nx())).any()) return false;
        for (std::size_t y = 0; y < ny(); ++y) {
            const Bits& xy = cols_[y];
            for (auto x = xy.find_first(); x != Bits::npos; x = xy.find_next(x)) {
                Bits s = xy;
                s.reset(x);
                if (association_closure(s) != s) return false;
            }
        }
        return true;
    }

    bool preserves_attribute_privacy_for(const std::string& x_id) const {
        require_nonvoid();
        std::size_t x = x_.index(x_id);
        const Bits& yx = rows_[x];
        if (yx.none()) return attribute_closure(Bits(ny())).none();
        for (auto y = yx.find_first(); y != Bits::npos; y = yx.find_next(y)) {
            Bits g = yx;
            g.reset(y);
            if (attribute_closure(g) != g) return false;
        }
        return true;
    }

    bool uniquely_identifiable(const std::string& x_id) const {
        std::size_t x = x_.index(x_id);
        Bits s = psi(rows_[x]);
        return s.count() == 1 && s.test(x);
    }

    bool is_tight() const {
        require_nonvoid();
        for (const auto& r : rows_)
            if (r.none()) return false;
        for (const auto& c : cols_)
            if (c.none()) return false;
        return true;
    }

    // connectivity of the bipartite incidence graph; isolated vertices count as components
    bool is_connected() const {
        require_nonvoid();
        return component_labels().second == 1;
    }

    std::vector<Relation> components() const {
        if (!is_tight()) fail(errc::not_tight, "components requires a tight relation");
        auto [label, n] = component_labels();
        std::vector<Relation> out;
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::string> xs, ys;
            for (std::size_t x = 0; x < nx(); ++x)
                if (label.first[x] == c) xs.push_back(x_.id(x));
            for (std::size_t y = 0; y < ny(); ++y)
                if (label.second[y] == c) ys.push_back(y_.id(y));
            std::vector<std::pair<std::string, std::string>> pairs;
            for (const auto& xi : xs)
                for (auto y = rows_[x_.index(xi)].find_first(); y != Bits::npos;
                     y = rows_[x_.index(xi)].find_next(y))
                    pairs.emplace_back(xi, y_.id(y));
            out.push_back(build(pairs, xs, ys));
        }
        return out;
    }

    Relation add_entry(const std::string& xi, const std::string& yi) const {
        Relation r = *this;
        std::size_t x = x_.index(xi), y = y_.index(yi);
        r.rows_[x].set(y);
        r.cols_[y].set(x);
        return r;
    }
    Relation remove_entry(const std::string& xi, const std::string& yi) const {
        Relation r = *this;
        std::size_t x = x_.index(xi), y = y_.index(yi);
        r.rows_[x].reset(y);
        r.cols_[y].reset(x);
        return r;
    }

    std::vector<std::pair<std::string, std::string>> pairs() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t x = 0; x < nx(); ++x)
            for (auto y = rows_[x].find_first(); y != Bits::npos; y = rows_[x].find_next(y))
                out.emplace_back(x_.id(x), y_.id(y));
        return out;
    }

private:
    std::pair<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t>
    component_labels() const {
        const std::size_t none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> lx(nx(), none), ly(ny(), none);
        std::size_t comp = 0;
        std::deque<std::pair<bool, std::size_t>> queue;  // (is_individual, index)
        auto visit = [&](bool is_x, std::size_t i) {
            auto& l = is_x ? lx : ly;
            if (l[i] == none) {
                l[i] = comp;
                queue.emplace_back(is_x, i);
            }
        };
        for (std::size_t start = 0; start < nx() + ny(); ++start) {
            bool is_x = start < nx();
            std::size_t idx = is_x ? start : start - nx();
            if ((is_x ? lx : ly)[idx] != none) continue;
            visit(is_x, idx);
            while (!queue.empty()) {
                auto [qx, qi] = queue.front();
                queue.pop_front();
                const Bits& nbrs = qx ? rows_[qi] : cols_[qi];
                for (auto j = nbrs.find_first(); j != Bits::npos; j = nbrs.find_next(j))
                    visit(!qx, j);
            }
            ++comp;
        }
        return {{lx, ly}, comp};
    }

    Universe x_, y_;
    std::vector<Bits> rows_, cols_;
};

// boolean matrix product: (x,z) related iff some y links them
inline Relation compose(const Relation& c, const Relation& s) {
    if (!(c.attributes() == s.individuals()))
        fail(errc::universe_mismatch, "compose: inner universes differ");
    std::vector<Bits> rows(c.nx(), Bits(s.ny()));
    for (std::size_t x = 0; x < c.nx(); ++x)
        for (auto y = c.row(x).find_first(); y != Bits::npos; y = c.row(x).find_next(y))
            rows[x] |= s.row(y);
    return Relation::from_bits(c.individuals(), s.attributes(), std::move(rows));
}

// exact isomorphism up to row/column permutation, with degree pruning
inline bool isomorphic(const Relation& a, const Relation& b) {
    if (a.nx() != b.nx() || a.ny() != b.ny()) return false;
    std::size_t n = a.nx();
    std::vector<std::size_t> perm(n, static_cast<std::size_t>(-1));
    std::vector<bool> used(n, false);
    auto cols_match = [&]() {
        // after fixing a full row bijection, columns must match as multisets
        std::vector<Bits> pa, pb;
        for (std::size_t y = 0; y < a.ny(); ++y) {
            Bits ca(n), cb = b.col(y);
            for (std::size_t x = 0; x < n; ++x)
                if (a.at(x, y)) ca.set(perm[x]);
            pa.push_back(ca);
            pb.push_back(cb);
        }
        auto key = [](const Bits& bset) {
            std::string s;
            boost::to_string(bset, s);
            return s;
        };
        std::vector<std::string> ka, kb;
        for (auto& c : pa) ka.push_back(key(c));
        for (auto& c : pb) kb.push_back(key(c));
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        return ka == kb;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t x) -> bool {
        if (x == n) return cols_match();
        for (std::size_t t = 0; t < n; ++t) {
            if (used[t] || a.row(x).count() != b.row(t).count()) continue;
            perm[x] = t;
            used[t] = true;
            if (rec(x + 1)) return true;
            used[t] = false;
        }
        return false;
    };
    return rec(0);
}

inline Relation cyclic_staircase_relation(std::size_t n) {
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back("x" + std::to_string(i + 1));
        ys.push_back("y" + std::to_string(i + 1));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        pairs.emplace_back(xs[i], ys[i]);
        pairs.emplace_back(xs[i], ys[(i + 1) % n]);
    }
    return Relation::build(pairs, xs, ys);
}

inline Relation spherical_boundary_relation(std::size_t n) {
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back("x" + std::to_string(i + 1));
        ys.push_back("y" + std::to_string(i + 1));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j != n - 1) pairs.emplace_back(xs[i], ys[j]);
    return Relation::build(pairs, xs, ys);
}

enum class PrivacyShape { Singleton, CyclicStaircase, SphericalBoundary, Other };

inline const char* to_string(PrivacyShape s) {
    switch (s) {
        case PrivacyShape::Singleton: return "Singleton";
        case PrivacyShape::CyclicStaircase: return "CyclicStaircase";
        case PrivacyShape::SphericalBoundary: return "SphericalBoundary";
        default: return "Other";
    }
}

// per-component match against the privacy-preserving shapes
inline std::vector<PrivacyShape> classify_privacy_shape(const Relation& r) {
    std::vector<PrivacyShape> out;
    for (const Relation& c : r.components()) {
        if (c.nx() == 1 && c.ny() == 1) {
            out.push_back(PrivacyShape::Singleton);
        } else if (c.nx() == c.ny() && c.nx() >= 3 &&
                   isomorphic(c, cyclic_staircase_relation(c.nx()))) {
            out.push_back(PrivacyShape::CyclicStaircase);
        } else if (c.nx() == c.ny() && c.nx() >= 3 &&
                   isomorphic(c, spherical_boundary_relation(c.nx()))) {
            out.push_back(PrivacyShape::SphericalBoundary);
        } else {
            out.push_back(PrivacyShape::Other);
        }
    }
    return out;
}

struct SquareSymmetryReport {
    bool applicable = false;           // square, no blank columns, attribute privacy holds
    bool no_blank_rows = false;        // conclusion (i)
    bool all_identifiable = false;     // conclusion (ii)
    bool association_privacy = false;  // conclusion (iii)
    std::vector<std::string> violations;
    bool ok() const {
        return !applicable || (no_blank_rows && all_identifiable && association_privacy);
    }
};

inline SquareSymmetryReport check_square_symmetry(const Relation& r) {
    if (r.nx() != r.ny() || r.nx() <= 1)
        fail(errc::precondition_violated, "check_square_symmetry needs |X|=|Y|>1");
    for (std::size_t y = 0; y < r.ny(); ++y)
        if (r.col(y).none())
            fail(errc::precondition_violated, "check_square_symmetry needs no blank columns");
    SquareSymmetryReport rep;
    rep.applicable = r.preserves_attribute_privacy();
    if (!rep.applicable) return rep;
    rep.no_blank_rows = true;
    for (std::size_t x = 0; x < r.nx(); ++x)
        if (r.row(x).none()) {
            rep.no_blank_rows = false;
            rep.violations.push_back("blank row: " + r.individuals().id(x));
        }
    rep.all_identifiable = true;
    for (const auto& xi : r.individuals().ids())
        if (!r.uniquely_identifiable(xi)) {
            rep.all_identifiable = false;
            rep.violations.push_back("not uniquely identifiable: " + xi);
        }
    rep.association_privacy = r.preserves_association_privacy();
    if (!rep.association_privacy) rep.violations.push_back("association privacy fails");
    return rep;
}

struct MinIdentifyingResult {
    std::optional<Bits> best;
    bool truncated = false;
    std::uint64_t nodes = 0;
};

// exact branch and bound for the smallest chi inside phi(sigma) with psi(chi) = sigma
inline MinIdentifyingResult min_identifying_set(const Relation& r, const Bits& sigma,
                                                std::uint64_t node_cap = 1ULL << 20) {
    r.require_nonvoid();
    Bits gamma = r.phi(sigma);
    if (r.psi(gamma) != sigma) fail(errc::not_stable, "sigma is not inference stable");
    std::vector<std::size_t> cand = bit_indices(gamma);
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
        return r.col(a).count() < r.col(b).count() ||
               (r.col(a).count() == r.col(b).count() && a < b);
    });
    // suffix intersections for pruning: best possible shrink using remaining columns
    std::vector<Bits> suffix(cand.size() + 1, full_bits(r.nx()));
    for (std::size_t i = cand.size(); i-- > 0;) suffix[i] = suffix[i + 1] & r.col(cand[i]);
    MinIdentifyingResult res;
    Bits chosen(r.ny());
    std::function<void(std::size_t, Bits, std::size_t)> rec = [&](std::size_t i, Bits cur,
                                                                  std::size_t size) {
        if (res.truncated) return;
        if (++res.nodes > node_cap) {
            res.truncated = true;
            return;
        }
        if (cur == sigma) {
            if (!res.best || size < res.best->count()) res.best = chosen;
            return;
        }
        if (i == cand.size()) return;
        if (res.best && size + 1 >= res.best->count()) return;
        if ((cur & suffix[i]) != sigma) return;  // remaining columns cannot finish the job
        // include cand[i] only if it shrinks cur, otherwise it is useless here
        Bits with = cur & r.col(cand[i]);
        if (with != cur) {
            chosen.set(cand[i]);
            rec(i + 1, with, size + 1);
            chosen.reset(cand[i]);
        }
        rec(i + 1, cur, size);
    };
    if (sigma == full_bits(r.nx())) {
        res.best = Bits(r.ny());
        return res;
    }
    rec(0, full_bits(r.nx()), 0);
    return res;
}

// is there gamma subset of Y_x minus {y}, |gamma| <= k, with psi(gamma) inside X_y
inline bool mininf_decision(const Relation& r, const std::string& x_id, const std::string& y_id,
                            std::size_t k) {
    r.require_nonvoid();
    std::size_t x = r.individuals().index(x_id);
    std::size_t y = r.attributes().index(y_id);
    if (!r.at(x, y)) fail(errc::unknown_id, "mininf: y must be an attribute of x");
    Bits pool = r.row(x);
    pool.reset(y);
    const Bits& target = r.col(y);
    std::vector<std::size_t> cand = bit_indices(pool);
    std::vector<Bits> suffix(cand.size() + 1, full_bits(r.nx()));
    for (std::size_t i = cand.size(); i-- > 0;) suffix[i] = suffix[i + 1] & r.col(cand[i]);
    std::function<bool(std::size_t, Bits, std::size_t)> rec = [&](std::size_t i, Bits cur,
                                                                  std::size_t used) -> bool {
        if (cur.is_subset_of(target)) return true;
        if (i == cand.size() || used == k) return false;
        if (!(cur & suffix[i]).is_subset_of(target)) return false;
        Bits with = cur & r.col(cand[i]);
        if (with != cur && rec(i + 1, with, used + 1)) return true;
        return rec(i + 1, cur, used);
    };
    return rec(0, full_bits(r.nx()), 0);
}

struct MinInfInstance {
    Relation relation;
    std::string x, y;
    std::size_t k;
};

// Set Cover reduction: universe row x0 has every attribute, column i avoids S_i
inline MinInfInstance setcover_to_mininf(const std::vector<std::vector<std::string>>& sets,
                                         const std::vector<std::string>& universe, std::size_t k) {
    std::vector<std::string> xs = {"x0"};
    for (const auto& u : universe) xs.push_back("u_" + u);
    std::vector<std::string> ys = {"c0"};
    for (std::size_t i = 1; i <= sets.size(); ++i) ys.push_back("c" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& yi : ys) pairs.emplace_back("x0", yi);
    for (std::size_t i = 1; i <= sets.size(); ++i) {
        const auto& s = sets[i - 1];
        for (const auto& u : universe)
            if (std::find(s.begin(), s.end(), u) == s.end())
                pairs.emplace_back("u_" + u, "c" + std::to_string(i));
    }
    return {Relation::build(pairs, xs, ys), "x0", "c0", k};
}

}  // namespace dowker

#endif
