#ifndef DOWKER_STRATEGY_HPP
#define DOWKER_STRATEGY_HPP

#include "morphism.hpp"

namespace dowker {

enum class ActionKind { deterministic, nondeterministic, stochastic };

struct Action {
    std::string id;
    std::string source;
    std::vector<std::string> targets;
    ActionKind kind = ActionKind::deterministic;
};

struct UncertainGraph {
    std::vector<std::string> states;
    std::vector<Action> actions;

    Universe state_universe() const { return Universe(states); }
    Universe action_universe() const {
        std::vector<std::string> ids;
        for (const auto& a : actions) ids.push_back(a.id);
        return Universe(ids);
    }
    void validate() const {
        if (states.empty()) fail(errc::precondition_violated, "graph needs at least one state");
        Universe sv = state_universe();
        Universe au = action_universe();  // throws on duplicate action ids
        (void)au;
        for (const auto& a : actions) {
            if (a.targets.empty()) fail(errc::precondition_violated, "action without targets: " + a.id);
            if (a.kind == ActionKind::stochastic)
                fail(errc::stochastic_unsupported,
                     "stochastic action " + a.id + "; model it as nondeterministic to proceed");
            if (a.kind == ActionKind::deterministic && a.targets.size() != 1)
                fail(errc::precondition_violated, "deterministic action with several targets: " + a.id);
            sv.index(a.source);
            for (const auto& t : a.targets) sv.index(t);
        }
        if (actions.size() > 24) fail(errc::too_large, "action budget is 24");
    }
};

namespace detail {

// acyclicity of the underlying edge multiset of an action subset
inline bool acyclic(const UncertainGraph& g, const Universe& sv, const Bits& chosen) {
    std::size_t n = sv.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto a = chosen.find_first(); a != Bits::npos; a = chosen.find_next(a)) {
        std::size_t s = sv.index(g.actions[a].source);
        for (const auto& t : g.actions[a].targets) adj[s].push_back(sv.index(t));
    }
    std::vector<int> state(n, 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
        state[v] = 1;
        for (std::size_t w : adj[v]) {
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

}  // namespace detail

// maximal acyclic action sets, canonically ordered
inline std::vector<Bits> maximal_strategies(const UncertainGraph& g) {
    g.validate();
    Universe sv = g.state_universe();
    std::size_t n = g.actions.size();
    std::vector<Bits> out;
    Bits chosen(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t a = 0; a < n; ++a) {
                if (chosen.test(a)) continue;
                Bits ext = chosen;
                ext.set(a);
                if (detail::acyclic(g, sv, ext)) return;  // extendable, not maximal
            }
            out.push_back(chosen);
            return;
        }
        Bits with = chosen;
        with.set(i);
        if (detail::acyclic(g, sv, with)) {
            chosen.set(i);
            rec(i + 1);
            chosen.reset(i);
        }
        rec(i + 1);
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return bits_key(a) < bits_key(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline SimplicialComplex strategy_complex(const UncertainGraph& g) {
    Universe au = g.action_universe();
    std::vector<Bits> maxs = maximal_strategies(g);
    if (maxs.size() == 1 && maxs[0].none()) return SimplicialComplex::empty_complex(au);
    return SimplicialComplex::from_generators(au, maxs);
}

// goals of a strategy: states no member action leaves
inline Bits goal_states(const UncertainGraph& g, const Bits& strategy) {
    Universe sv = g.state_universe();
    Bits src(sv.size());
    for (auto a = strategy.find_first(); a != Bits::npos; a = strategy.find_next(a))
        src.set(sv.index(g.actions[a].source));
    return full_bits(sv.size()) - src;
}

inline std::vector<std::string> strategy_row_ids(std::size_t k) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= k; ++i) ids.push_back("s" + std::to_string(i));
    return ids;
}

// A: maximal strategies by actions; Phi_A is the strategy complex
inline Relation action_relation(const UncertainGraph& g) {
    Universe au = g.action_universe();
    std::vector<Bits> maxs = maximal_strategies(g);
    return Relation::from_bits(Universe(strategy_row_ids(maxs.size())), au, maxs);
}

// B: maximal strategies by their source states; Phi_B is the source complex
inline Relation source_relation(const UncertainGraph& g) {
    Universe sv = g.state_universe();
    std::vector<Bits> maxs = maximal_strategies(g);
    std::vector<Bits> rows;
    for (const auto& s : maxs) rows.push_back(full_bits(sv.size()) - goal_states(g, s));
    return Relation::from_bits(Universe(strategy_row_ids(maxs.size())), sv, rows);
}

inline SimplicialComplex source_complex(const UncertainGraph& g) {
    Relation b = source_relation(g);
    std::vector<Bits> gens;
    bool all_blank = true;
    for (std::size_t x = 0; x < b.nx(); ++x) {
        gens.push_back(b.row(x));
        all_blank = all_blank && b.row(x).none();
    }
    if (gens.empty() || all_blank) return SimplicialComplex::empty_complex(b.attributes());
    return SimplicialComplex::from_generators(b.attributes(), gens);
}

inline bool fully_controllable(const UncertainGraph& g) {
    Universe sv = g.state_universe();
    SimplicialComplex src = source_complex(g);
    SimplicialComplex bnd = boundary_complex(sv);
    bool by_source = src == bnd || (src.is_empty_complex() && bnd.is_empty_complex());
    if (sv.size() == 1) return by_source;
    // cross-check: the strategy complex must look like S^{n-2}
    BettiVector bv = reduced_betti(strategy_complex(g));
    std::size_t k = sv.size() - 2;
    bool by_betti = !bv.void_complex && !bv.empty_complex && bv.betti.size() > k;
    if (by_betti)
        for (std::size_t d = 0; d < bv.betti.size(); ++d)
            by_betti = by_betti && bv.betti[d] == (d == k ? 1 : 0);
    // homology agreement is necessary for controllability, not sufficient on its own
    if (by_source && !by_betti)
        fail(errc::precondition_violated, "controllability checks disagree");
    return by_source;
}

// longest informative action release sequences identifying a maximal strategy
inline std::pair<int, std::vector<std::vector<std::string>>> strategy_iars(
    const UncertainGraph& g, const std::vector<std::string>& sigma_actions,
    std::size_t cap = 1u << 14) {
    Universe au = g.action_universe();
    Bits sigma = au.set_of(sigma_actions);
    std::vector<Bits> maxs = maximal_strategies(g);
    std::size_t row = maxs.size();
    for (std::size_t i = 0; i < maxs.size(); ++i)
        if (maxs[i] == sigma) row = i;
    if (row == maxs.size()) fail(errc::not_maximal, "sigma is not a maximal strategy");
    Relation a = action_relation(g);
    return identifying_iars(a, a.individuals().id(row), cap);
}

namespace detail {

// candidate goals an observer still considers possible after seeing a prefix
inline Bits candidate_goals(const UncertainGraph& g, const std::vector<Bits>& maxs,
                            const Bits& prefix) {
    Bits out(g.states.size());
    for (const auto& s : maxs)
        if (prefix.is_subset_of(s)) out |= goal_states(g, s);
    return out;
}

}  // namespace detail

// a complete strategy for v released so every proper prefix leaves at least two goals open
inline std::vector<std::string> goal_delay_sequence(const UncertainGraph& g,
                                                    const std::string& v_id) {
    if (!fully_controllable(g)) fail(errc::not_controllable, "graph is not fully controllable");
    Universe sv = g.state_universe();
    Universe au = g.action_universe();
    if (sv.size() < 2) fail(errc::precondition_violated, "need at least two states");
    std::size_t v = sv.index(v_id);
    std::vector<Bits> maxs = maximal_strategies(g);

    // one action per non-goal state, acyclic, goal exactly v
    std::vector<std::size_t> others;
    for (std::size_t s = 0; s < sv.size(); ++s)
        if (s != v) others.push_back(s);
    std::vector<std::vector<std::size_t>> per_state(sv.size());
    for (std::size_t a = 0; a < g.actions.size(); ++a)
        per_state[sv.index(g.actions[a].source)].push_back(a);

    std::vector<std::string> result;
    std::vector<std::size_t> picked;
    std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
        if (i == others.size()) {
            Bits strat(g.actions.size());
            for (std::size_t a : picked) strat.set(a);
            if (!detail::acyclic(g, sv, strat)) return false;
            // try every order; condition (ii) checked exhaustively over the strategy complex
            std::vector<std::size_t> order = picked;
            std::sort(order.begin(), order.end());
            do {
                bool ok = true;
                Bits prefix(g.actions.size());
                for (std::size_t j = 0; j + 1 < order.size() && ok; ++j) {
                    prefix.set(order[j]);
                    if (detail::candidate_goals(g, maxs, prefix).count() < 2) ok = false;
                }
                if (ok) {
                    for (std::size_t a : order) result.push_back(au.id(a));
                    return true;
                }
            } while (std::next_permutation(order.begin(), order.end()));
            return false;
        }
        for (std::size_t a : per_state[others[i]]) {
            picked.push_back(a);
            if (choose(i + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    if (!choose(0)) fail(errc::not_complete, "no delaying complete strategy found for " + v_id);
    return result;
}

// release order walking a deterministic Hamiltonian cycle backwards from the goal
inline std::vector<std::string> hamiltonian_iars(const UncertainGraph& g,
                                                 const std::vector<std::string>& sigma_actions,
                                                 const std::vector<std::string>& cycle) {
    Universe sv = g.state_universe();
    Universe au = g.action_universe();
    std::size_t n = sv.size();
    if (cycle.size() != n) fail(errc::not_hamiltonian, "cycle must use every state once");
    std::vector<std::size_t> order;  // states in cycle order
    for (std::size_t i = 0; i < n; ++i) {
        const Action& a = g.actions[au.index(cycle[i])];
        if (a.kind != ActionKind::deterministic)
            fail(errc::not_hamiltonian, "cycle action not deterministic: " + a.id);
        order.push_back(sv.index(a.source));
    }
    {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i)
            if (sorted[i] != i) fail(errc::not_hamiltonian, "cycle sources must be distinct");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Action& a = g.actions[au.index(cycle[i])];
        if (sv.index(a.targets[0]) != order[(i + 1) % n])
            fail(errc::not_hamiltonian, "cycle does not chain");
    }

    Bits sigma = au.set_of(sigma_actions);
    std::vector<Bits> maxs = maximal_strategies(g);
    if (std::find(maxs.begin(), maxs.end(), sigma) == maxs.end())
        fail(errc::not_maximal, "sigma is not a maximal strategy");
    Bits goals = goal_states(g, sigma);
    if (goals.count() != 1) fail(errc::not_complete, "sigma must be complete for a single goal");
    std::size_t v = goals.find_first();

    // relabel along the cycle so the goal is last, then pick one sigma action per state
    std::size_t vpos = 0;
    while (order[vpos] != v) ++vpos;
    std::vector<std::size_t> relabel;  // states 1..n-1 in cycle order after v
    for (std::size_t i = 1; i < n; ++i) relabel.push_back(order[(vpos + i) % n]);
    std::vector<std::string> seq;
    for (std::size_t i = relabel.size(); i-- > 0;) {
        std::size_t s = relabel[i];
        std::string pick;
        for (auto a = sigma.find_first(); a != Bits::npos; a = sigma.find_next(a)) {
            if (sv.index(g.actions[a].source) != s) continue;
            if (pick.empty() || g.actions[a].id < pick) pick = g.actions[a].id;
        }
        if (pick.empty()) fail(errc::not_complete, "sigma has no action at a non-goal state");
        seq.push_back(pick);
    }
    Relation a = action_relation(g);
    if (!is_informative(a, seq))
        fail(errc::precondition_violated, "constructed sequence is not informative");
    return seq;
}

}  // namespace dowker

#endif
