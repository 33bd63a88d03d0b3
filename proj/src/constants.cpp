#include "synkit/constants.hpp"

#include <algorithm>

#include "synkit/minimize.hpp"
#include "synkit/power.hpp"
#include "synkit/synchro.hpp"

namespace synkit {

namespace {

bool meets_threshold(const StateSet& s, const std::optional<State>& sink) {
    return sink ? s.size() <= 2 : s.size() == 1;
}

// Shortest word collapsing {p, q} into a singleton or a sink-containing
// pair, found in the pair automaton P^[2].
std::optional<Word> collapse_pair(const Semiautomaton& a, State p, State q,
                                  const std::optional<State>& sink) {
    auto target = [&sink](const StateSet& s) {
        return s.size() == 1 || (sink && set_contains(s, *sink));
    };
    // configurations here stay of size <= 2, so the subset cap is ample
    return power_search(a, make_state_set({p, q}), target, kDefaultSubsetCap);
}

}  // namespace

std::optional<State> find_sink(const Acceptor& a_l) {
    const Semiautomaton& base = a_l.base();
    for (State q = 0; q < base.num_states(); ++q) {
        if (a_l.is_final(q)) continue;
        bool fixed = true;
        for (int l = 0; l < base.num_letters() && fixed; ++l)
            if (base.step(q, l) != q) fixed = false;
        if (fixed) return q;
    }
    return std::nullopt;
}

bool is_constant(const Acceptor& a_l, const Word& u) {
    Acceptor min = minimize(a_l);
    StateSet image = min.base().image(min.base().all_states(), u);
    return meets_threshold(image, find_sink(min));
}

bool has_constant(const Acceptor& a_l) {
    Acceptor min = minimize(a_l);
    std::optional<State> sink = find_sink(min);
    if (!sink) return is_synchronizing(min.base());
    int n = min.num_states();
    for (State p = 0; p < n; ++p) {
        if (p == *sink) continue;
        for (State q = p + 1; q < n; ++q) {
            if (q == *sink) continue;
            if (!collapse_pair(min.base(), p, q, sink)) return false;
        }
    }
    return true;
}

bool has_constant_oracle(const Acceptor& a_l, std::size_t cap) {
    Acceptor min = minimize(a_l);
    std::optional<State> sink = find_sink(min);
    auto target = [&sink](const StateSet& s) { return meets_threshold(s, sink); };
    return power_search(min.base(), min.base().all_states(), target, cap).has_value();
}

std::optional<Word> find_constant(const Acceptor& a_l) {
    Acceptor min = minimize(a_l);
    std::optional<State> sink = find_sink(min);
    const Semiautomaton& base = min.base();
    Word witness;
    StateSet current = base.all_states();
    while (!meets_threshold(current, sink)) {
        // first two distinct non-sink states of the current image
        StateSet candidates;
        for (State q : current)
            if (!sink || q != *sink) candidates.push_back(q);
        State p = candidates[0];
        State q = candidates[1];
        std::optional<Word> u = collapse_pair(base, p, q, sink);
        if (!u) return std::nullopt;
        witness += *u;
        current = base.image(current, *u);
    }
    return witness;
}

Language constants_language(const Acceptor& a_l, std::size_t cap) {
    Acceptor min = minimize(a_l);
    std::optional<State> sink = find_sink(min);
    auto accept = [sink](const StateSet& s) { return meets_threshold(s, sink); };
    return Language::of(power_acceptor(min.base(), min.base().all_states(), accept, cap));
}

Language partial_syn_language(const Acceptor& a_l, std::size_t cap) {
    Acceptor min = minimize(a_l);
    std::optional<State> sink = find_sink(min);
    if (!sink) throw PreconditionError("partial reset words require a non-accepting sink");
    State s = *sink;
    auto accept = [s](const StateSet& set) {
        return set.size() <= 2 && set_contains(set, s);
    };
    return Language::of(power_acceptor(min.base(), min.base().all_states(), accept, cap));
}

namespace {

std::vector<bool> live_states(const Acceptor& a) {
    // co-reachable states of a (canonical) acceptor
    int n = a.num_states();
    int k = a.base().num_letters();
    std::vector<std::vector<State>> radj(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q)
        for (int l = 0; l < k; ++l) radj[static_cast<std::size_t>(a.base().step(q, l))].push_back(q);
    std::vector<bool> live(static_cast<std::size_t>(n), false);
    std::vector<State> stack;
    for (State q : a.finals()) {
        live[static_cast<std::size_t>(q)] = true;
        stack.push_back(q);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : radj[static_cast<std::size_t>(q)]) {
            if (!live[static_cast<std::size_t>(p)]) {
                live[static_cast<std::size_t>(p)] = true;
                stack.push_back(p);
            }
        }
    }
    return live;
}

}  // namespace

Language z_language(const Acceptor& a_l, std::size_t cap) {
    // u is a factor of some word of L iff starting anywhere reachable
    // (= anywhere, minimal acceptors are trim on the reachable side) the
    // run on u can end in a live state. Z collects the words where no
    // tracked run stays live.
    Acceptor min = minimize(a_l);
    std::vector<bool> live = live_states(min);
    auto accept = [&live](const StateSet& s) {
        return std::none_of(s.begin(), s.end(),
                            [&live](State q) { return live[static_cast<std::size_t>(q)]; });
    };
    return Language::of(power_acceptor(min.base(), min.base().all_states(), accept, cap));
}

bool z_nonempty(const Acceptor& a_l, std::size_t cap) { return !is_empty(z_language(a_l, cap)); }

bool complement_contains_right_ideal(const Acceptor& a_l) {
    Acceptor min = minimize(a_l);
    std::vector<bool> live = live_states(min);
    return std::find(live.begin(), live.end(), false) != live.end();
}

PropCheck prop5_check(const Acceptor& a_l, std::size_t cap) {
    Acceptor min = minimize(a_l);
    PropCheck out;
    out.criterion = has_constant(min) && !complement_contains_right_ideal(min);
    bool sync = is_synchronizing(min.base());
    out.direct = sync && !is_empty(intersection(Language::of(min), syn_language(min.base(), cap)));
    return out;
}

PropCheck prop6_check(const Acceptor& a_l, std::size_t cap) {
    Acceptor min = minimize(a_l);
    PropCheck out;
    out.criterion = z_nonempty(min, cap) && complement_contains_right_ideal(min);
    bool sync = is_synchronizing(min.base());
    out.direct = sync && is_empty(intersection(Language::of(min), syn_language(min.base(), cap)));
    return out;
}

}  // namespace synkit
