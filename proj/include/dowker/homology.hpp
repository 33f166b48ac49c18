#ifndef DOWKER_HOMOLOGY_HPP
#define DOWKER_HOMOLOGY_HPP

#include <cmath>

#include "galois.hpp"

namespace dowker {

inline std::size_t gf2_rank(std::vector<Bits> rows) {
    std::size_t rank = 0;
    std::vector<Bits> basis;
    for (auto& v : rows) {
        for (const auto& b : basis) {
            auto p = b.find_first();
            if (p != Bits::npos && v.test(p)) v ^= b;
        }
        if (v.any()) {
            // keep the basis reduced on the leading bit
            auto p = v.find_first();
            for (auto& b : basis)
                if (b.test(p)) b ^= v;
            basis.push_back(v);
            ++rank;
        }
    }
    return rank;
}

struct BettiVector {
    std::vector<long> betti;       // beta_0 .. beta_maxdim
    bool empty_complex = false;    // the complex {emptyset}: beta_{-1} = 1
    bool void_complex = false;
};

namespace detail {

// faces of cardinality <= max_card, deduplicated, grouped by cardinality
inline std::vector<std::vector<Bits>> faces_by_card(const SimplicialComplex& s,
                                                    std::size_t max_card, std::size_t budget) {
    std::vector<std::unordered_set<Bits, BitsHash>> seen(max_card + 1);
    std::size_t total = 0;
    std::vector<std::size_t> combo;
    for (const auto& m : s.maximal_simplices()) {
        std::vector<std::size_t> verts = bit_indices(m);
        std::function<void(std::size_t, Bits&)> rec = [&](std::size_t i, Bits& cur) {
            std::size_t c = cur.count();
            if (seen[c].insert(cur).second && ++total > budget)
                fail(errc::too_large, "face budget exceeded; pass a max dimension");
            if (c == max_card) return;
            for (std::size_t j = i; j < verts.size(); ++j) {
                cur.set(verts[j]);
                rec(j + 1, cur);
                cur.reset(verts[j]);
            }
        };
        Bits cur(s.universe().size());
        rec(0, cur);
    }
    std::vector<std::vector<Bits>> out(max_card + 1);
    for (std::size_t c = 0; c <= max_card; ++c)
        out[c].assign(seen[c].begin(), seen[c].end());
    return out;
}

}  // namespace detail

inline BettiVector reduced_betti(const SimplicialComplex& s, int max_dim = -1,
                                 std::size_t budget = 1u << 22) {
    BettiVector out;
    if (s.is_void()) {
        out.void_complex = true;
        return out;
    }
    if (s.is_empty_complex()) {
        out.empty_complex = true;
        return out;
    }
    int dim_bound = static_cast<int>(s.dimension_bound());
    int top = max_dim < 0 ? dim_bound : std::min(max_dim, dim_bound);
    auto faces = detail::faces_by_card(s, static_cast<std::size_t>(top) + 2, budget);
    std::vector<std::unordered_map<Bits, std::size_t, BitsHash>> index(faces.size());
    for (std::size_t c = 0; c < faces.size(); ++c)
        for (std::size_t i = 0; i < faces[c].size(); ++i) index[c].emplace(faces[c][i], i);

    // rank of the reduced boundary map from (card)-faces down to (card-1)-faces
    auto boundary_rank = [&](std::size_t card) -> std::size_t {
        if (card == 0 || card >= faces.size() || faces[card].empty()) return 0;
        if (card == 1) return 1;  // every vertex maps to the empty simplex
        std::vector<Bits> rows;
        rows.reserve(faces[card].size());
        for (const auto& f : faces[card]) {
            Bits row(faces[card - 1].size());
            for (auto v = f.find_first(); v != Bits::npos; v = f.find_next(v)) {
                Bits sub = f;
                sub.reset(v);
                row.set(index[card - 1].at(sub));
            }
            rows.push_back(row);
        }
        return gf2_rank(std::move(rows));
    };

    out.betti.assign(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d) {
        std::size_t card = static_cast<std::size_t>(d) + 1;
        long nd = card < faces.size() ? static_cast<long>(faces[card].size()) : 0;
        long rd = static_cast<long>(boundary_rank(card));
        long rdp = static_cast<long>(boundary_rank(card + 1));
        out.betti[static_cast<std::size_t>(d)] = nd - rd - rdp;
    }
    return out;
}

// 2^k individuals by 2k attributes, one attribute per complementary pair
inline Relation kbit_relation(int k) {
    if (k < 1 || k > 4) fail(errc::out_of_range, "kbit_relation supports 1 <= k <= 4");
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= k; ++i) {
        ys.push_back("a" + std::to_string(i));
        ys.push_back("na" + std::to_string(i));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int code = 0; code < (1 << k); ++code) {
        std::string xid = "x";
        for (int i = 0; i < k; ++i) xid += (code >> i) & 1 ? '1' : '0';
        xs.push_back(xid);
        for (int i = 0; i < k; ++i)
            pairs.emplace_back(xid, ((code >> i) & 1 ? "a" : "na") + std::to_string(i + 1));
    }
    return Relation::build(pairs, xs, ys);
}

struct ChainBoundEntry {
    int k = 0;
    BigInt bound, actual;
    bool ok = false;
};
struct ChainBoundReport {
    std::vector<ChainBoundEntry> entries;
    bool all_ok = true;
};

// holes in the attribute complex force many long maximal chains in the poset
inline ChainBoundReport verify_chain_lower_bound(const Relation& r) {
    ChainBoundReport rep;
    BettiVector bv = reduced_betti(dowker_attribute_complex(r));
    LabeledPoset p = doubly_labeled_poset(r);
    for (std::size_t k = 0; k < bv.betti.size(); ++k) {
        if (bv.betti[k] == 0) continue;
        ChainBoundEntry e;
        e.k = static_cast<int>(k);
        e.bound = 1;
        for (int j = 2; j <= e.k + 2; ++j) e.bound *= j;
        e.actual = p.poset.count_maximal_chains(k);
        e.ok = e.actual >= e.bound;
        rep.all_ok = rep.all_ok && e.ok;
        rep.entries.push_back(e);
    }
    return rep;
}

struct LinkRecord {
    std::string individual;
    BettiVector betti;           // of the link's attribute complex, cone apexes stripped
    int longest_iars_length = 0;
    std::vector<long> isotropic_counts;  // c_2 .. c_6
    bool contractible = false;
};

inline std::vector<LinkRecord> link_survey(const Relation& r,
                                           const std::vector<std::string>& filter = {}) {
    r.require_nonvoid();
    std::vector<std::string> xs = filter.empty() ? r.individuals().ids() : filter;
    std::vector<LinkRecord> out;
    for (const auto& xid : xs) {
        if (!r.uniquely_identifiable(xid)) continue;
        LinkRecord rec;
        rec.individual = xid;
        Bits sigma(r.nx());
        sigma.set(r.individuals().index(xid));
        LinkRelation q = conditional_association_relation(r, sigma);
        SimplicialComplex phi_q = q.attribute_complex();
        rec.betti = reduced_betti(strip_cone_apexes(phi_q), 4);
        bool any = false;
        for (long b : rec.betti.betti) any = any || b != 0;
        rec.contractible = !any && !rec.betti.empty_complex && !rec.betti.void_complex;
        rec.isotropic_counts.assign(5, 0);
        if (q.override_ == ComplexOverride::NONE) {
            rec.longest_iars_length = longest_iars(q.relation).first;
            auto iso = isotropic_sets(q.relation, 6);
            for (std::size_t k = 2; k <= 6; ++k) {
                auto it = iso.find(k);
                rec.isotropic_counts[k - 2] = it == iso.end() ? 0 : static_cast<long>(it->second.size());
            }
        }
        out.push_back(rec);
    }
    return out;
}

struct ScatterPoint {
    std::string individual;
    BigInt h = 0, i = 0;
    double h_scaled = 0.0, i_scaled = 0.0;
};

// varying-radix encodings of the survey vectors, radixes taken from the survey itself
inline std::vector<ScatterPoint> scatter_measures(const std::vector<LinkRecord>& records) {
    std::vector<ScatterPoint> out;
    if (records.empty()) return out;
    std::vector<long> hmax(5, 0), imax(6, 0);
    for (const auto& rec : records) {
        for (std::size_t d = 0; d < 5; ++d)
            if (d < rec.betti.betti.size()) hmax[d] = std::max(hmax[d], rec.betti.betti[d]);
        imax[0] = std::max(imax[0], static_cast<long>(rec.longest_iars_length));
        for (std::size_t j = 0; j < 5; ++j) imax[j + 1] = std::max(imax[j + 1], rec.isotropic_counts[j]);
    }
    auto encode = [](const std::vector<long>& digits, const std::vector<long>& maxima) {
        BigInt value = 0, weight = 1;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            value += digits[j] * weight;
            weight *= maxima[j] + 1;
        }
        return value;
    };
    for (const auto& rec : records) {
        ScatterPoint pt;
        pt.individual = rec.individual;
        std::vector<long> hdig(5, 0);
        for (std::size_t d = 0; d < 5 && d < rec.betti.betti.size(); ++d) hdig[d] = rec.betti.betti[d];
        pt.h = rec.contractible ? 1 : encode(hdig, hmax);
        std::vector<long> idig(6, 0);
        idig[0] = rec.longest_iars_length;
        for (std::size_t j = 0; j < 5; ++j) idig[j + 1] = rec.isotropic_counts[j];
        pt.i = encode(idig, imax);
        pt.h_scaled = std::pow(pt.h.convert_to<double>(), 0.25);
        pt.i_scaled = pt.i > 0 ? std::log10(pt.i.convert_to<double>()) : 0.0;
        out.push_back(pt);
    }
    return out;
}

}  // namespace dowker

#endif
