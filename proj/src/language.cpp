#include "synkit/language.hpp"

#include <algorithm>
#include <map>

#include "synkit/aw.hpp"
#include "synkit/errors.hpp"
#include "synkit/power.hpp"

namespace synkit {

namespace {

void require_same_alphabet(const Language& l1, const Language& l2) {
    if (!(l1.alphabet() == l2.alphabet())) throw AlphabetMismatch();
}

}  // namespace

Language Language::empty(const Alphabet& alphabet) {
    std::vector<State> delta(alphabet.size(), 0);
    return Language::of(Acceptor(Semiautomaton(1, alphabet, std::move(delta)), 0, {}));
}

Language Language::all(const Alphabet& alphabet) {
    std::vector<State> delta(alphabet.size(), 0);
    return Language::of(Acceptor(Semiautomaton(1, alphabet, std::move(delta)), 0, {0}));
}

Language Language::single_word(const Word& w, const Alphabet& alphabet) {
    // chain of |w|+1 states plus a dead state
    int n = static_cast<int>(w.size()) + 2;
    int k = static_cast<int>(alphabet.size());
    int dead = n - 1;
    std::vector<State> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), dead);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int l = alphabet.index_of(w[i]);
        delta[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] =
            static_cast<State>(i) + 1;
    }
    return Language::of(
        Acceptor(Semiautomaton(n, alphabet, std::move(delta)), 0, {static_cast<State>(w.size())}));
}

Language combine(const Language& l1, const Language& l2, SetOp op) {
    require_same_alphabet(l1, l2);
    const Acceptor& a = l1.acceptor();
    const Acceptor& b = l2.acceptor();
    int k = static_cast<int>(l1.alphabet().size());
    int nb = b.num_states();

    auto encode = [nb](State p, State q) { return p * nb + q; };
    std::map<int, int> ids;
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> delta;
    pairs.emplace_back(a.initial(), b.initial());
    ids.emplace(encode(a.initial(), b.initial()), 0);
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [p, q] = pairs[head];
        for (int l = 0; l < k; ++l) {
            State tp = a.base().step(p, l);
            State tq = b.base().step(q, l);
            auto [it, inserted] = ids.emplace(encode(tp, tq), static_cast<int>(pairs.size()));
            if (inserted) pairs.emplace_back(tp, tq);
            delta.push_back(it->second);
        }
    }
    StateSet finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool fa = a.is_final(pairs[i].first);
        bool fb = b.is_final(pairs[i].second);
        bool keep = op == SetOp::intersection ? (fa && fb)
                    : op == SetOp::union_     ? (fa || fb)
                                              : (fa && !fb);
        if (keep) finals.push_back(static_cast<State>(i));
    }
    return Language::of(Acceptor(
        Semiautomaton(static_cast<int>(pairs.size()), l1.alphabet(), std::move(delta)), 0, finals));
}

Language intersection(const Language& l1, const Language& l2) {
    return combine(l1, l2, SetOp::intersection);
}
Language unite(const Language& l1, const Language& l2) { return combine(l1, l2, SetOp::union_); }
Language difference(const Language& l1, const Language& l2) {
    return combine(l1, l2, SetOp::difference);
}

Language complement(const Language& l) {
    const Acceptor& a = l.acceptor();
    StateSet finals;
    for (State q = 0; q < a.num_states(); ++q)
        if (!a.is_final(q)) finals.push_back(q);
    return Language::of(Acceptor(a.base(), a.initial(), finals));
}

bool includes(const Language& l1, const Language& l2) {
    return is_empty(difference(l2, l1));
}

bool equals(const Language& l1, const Language& l2) {
    require_same_alphabet(l1, l2);
    return l1 == l2;
}

bool is_empty(const Language& l) { return l.acceptor().finals().empty(); }

namespace {

// States of the canonical acceptor that lie on some path from the initial
// state to a final state (all states are reachable after minimize).
std::vector<bool> trim_states(const Acceptor& a) {
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

std::optional<int> longest_word_length(const Language& l) {
    const Acceptor& a = l.acceptor();
    if (is_empty(l)) return -1;
    std::vector<bool> trim = trim_states(a);
    int n = a.num_states();
    int k = a.base().num_letters();
    // cycle detection on the trim subgraph
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
    bool cyclic = false;
    auto dfs = [&](auto&& self, State q) -> void {
        color[static_cast<std::size_t>(q)] = 1;
        for (int ltr = 0; ltr < k; ++ltr) {
            State t = a.base().step(q, ltr);
            if (!trim[static_cast<std::size_t>(t)]) continue;
            if (color[static_cast<std::size_t>(t)] == 1)
                cyclic = true;
            else if (color[static_cast<std::size_t>(t)] == 0)
                self(self, t);
        }
        color[static_cast<std::size_t>(q)] = 2;
    };
    dfs(dfs, a.initial());
    if (cyclic) return std::nullopt;
    // longest initial->final path on the trim sub-DAG; every trim state
    // reaches a final, so the memo is always >= 0 once computed
    std::vector<int> best_to_final(static_cast<std::size_t>(n), -1);
    auto dfs2 = [&](auto&& self, State q) -> int {
        int& memo = best_to_final[static_cast<std::size_t>(q)];
        if (memo != -1) return memo;
        int best = a.is_final(q) ? 0 : -2;
        for (int ltr = 0; ltr < k; ++ltr) {
            State t = a.base().step(q, ltr);
            if (!trim[static_cast<std::size_t>(t)]) continue;
            int sub = self(self, t);
            if (sub >= 0) best = std::max(best, 1 + sub);
        }
        memo = best;
        return best;
    };
    return dfs2(dfs2, a.initial());
}

bool is_finite(const Language& l) { return longest_word_length(l).has_value(); }

std::optional<Word> shortest_word(const Language& l) {
    const Acceptor& a = l.acceptor();
    if (a.is_final(a.initial())) return Word{};
    int n = a.num_states();
    int k = a.base().num_letters();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> via(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<State> queue{a.initial()};
    seen[static_cast<std::size_t>(a.initial())] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State q = queue[head];
        for (int ltr = 0; ltr < k; ++ltr) {
            State t = a.base().step(q, ltr);
            if (seen[static_cast<std::size_t>(t)]) continue;
            seen[static_cast<std::size_t>(t)] = true;
            parent[static_cast<std::size_t>(t)] = q;
            via[static_cast<std::size_t>(t)] = ltr;
            if (a.is_final(t)) {
                std::vector<Symbol> syms;
                for (State cur = t; parent[static_cast<std::size_t>(cur)] != -1;
                     cur = parent[static_cast<std::size_t>(cur)])
                    syms.push_back(a.alphabet().symbol(via[static_cast<std::size_t>(cur)]));
                std::reverse(syms.begin(), syms.end());
                return Word(std::move(syms));
            }
            queue.push_back(t);
        }
    }
    return std::nullopt;
}

Language left_quotient(const Language& l, const Word& w) {
    const Acceptor& a = l.acceptor();
    State start = a.base().run(a.initial(), w);
    return Language::of(Acceptor(a.base(), start, a.finals()));
}

Language right_quotient(const Language& l, const Word& w) {
    const Acceptor& a = l.acceptor();
    StateSet finals;
    for (State q = 0; q < a.num_states(); ++q)
        if (a.is_final(a.base().run(q, w))) finals.push_back(q);
    return Language::of(Acceptor(a.base(), a.initial(), finals));
}

IdealKind ideal_kind(const Language& l) {
    IdealKind out;
    if (is_empty(l)) return out;  // ideals are non-empty by definition
    const Acceptor& a = l.acceptor();
    bool right = true;
    for (State q : a.finals()) {
        for (int ltr = 0; ltr < a.base().num_letters() && right; ++ltr)
            if (!a.is_final(a.base().step(q, ltr))) right = false;
    }
    out.right = right;
    out.left = equals(prepend_closure(l), l);
    out.two_sided = out.left && out.right;
    return out;
}

Language principal_ideal(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) throw PreconditionError("principal ideal of the empty word");
    if (!alphabet.contains_word(w)) throw ParseError("word uses symbols outside the alphabet");
    PrefixMatcher matcher(w);
    int n = static_cast<int>(w.size()) + 1;
    int k = static_cast<int>(alphabet.size());
    int sink = n - 1;  // full match, absorbing
    std::vector<State> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < k; ++l) {
            delta[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(l)] =
                i == sink ? sink : matcher.step(i, alphabet.symbol(l));
        }
    }
    return Language::of(
        Acceptor(Semiautomaton(n, alphabet, std::move(delta)), 0, {sink}));
}

Language left_principal(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) throw PreconditionError("principal left ideal of the empty word");
    if (!alphabet.contains_word(w)) throw ParseError("word uses symbols outside the alphabet");
    PrefixMatcher matcher(w);
    int n = static_cast<int>(w.size()) + 1;
    int k = static_cast<int>(alphabet.size());
    std::vector<State> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l)
            delta[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(l)] = matcher.step(i, alphabet.symbol(l));
    return Language::of(
        Acceptor(Semiautomaton(n, alphabet, std::move(delta)), 0, {n - 1}));
}

namespace {

// Subset construction tracking runs started at every input position:
// S' = delta(S, a) ∪ {q0}. Starting from {q0} this recognizes Sigma^* L,
// starting from the empty set it recognizes Sigma^+ L.
Language prepend_with_start(const Language& l, const StateSet& start) {
    const Acceptor& a = l.acceptor();
    StateSet q0{a.initial()};
    auto step = [&a, q0](const StateSet& s, int letter) {
        return set_union(a.base().image_letter(s, letter), q0);
    };
    StateSet final_states = a.finals();
    auto accept = [final_states](const StateSet& s) {
        return !set_intersection(s, final_states).empty();
    };
    return Language::of(subset_acceptor(l.alphabet(), start, step, accept, kDefaultSubsetCap));
}

}  // namespace

Language prepend_closure(const Language& l) {
    return prepend_with_start(l, {l.acceptor().initial()});
}

Language prepend_plus(const Language& l) { return prepend_with_start(l, {}); }

Language append_plus(const Language& l) {
    const Acceptor& a = l.acceptor();
    int n = a.num_states();
    int k = a.base().num_letters();
    // product state (q, flag): flag = some proper prefix already landed in F
    auto encode = [n](State q, int flag) { return flag * n + q; };
    std::vector<State> delta(static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(k));
    for (int flag = 0; flag < 2; ++flag) {
        for (State q = 0; q < n; ++q) {
            for (int l = 0; l < k; ++l) {
                int next_flag = (flag || a.is_final(q)) ? 1 : 0;
                delta[static_cast<std::size_t>(encode(q, flag)) * static_cast<std::size_t>(k) +
                      static_cast<std::size_t>(l)] = encode(a.base().step(q, l), next_flag);
            }
        }
    }
    StateSet finals;
    for (State q = 0; q < n; ++q) finals.push_back(encode(q, 1));
    return Language::of(
        Acceptor(Semiautomaton(2 * n, a.alphabet(), std::move(delta)), encode(a.initial(), 0),
                 finals));
}

std::vector<Word> words_up_to(const Language& l, int max_len) {
    std::vector<Word> out;
    const Alphabet& alphabet = l.alphabet();
    std::vector<Word> layer{Word{}};
    if (l.contains(Word{})) out.push_back(Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * alphabet.size());
        for (const Word& u : layer) {
            for (const Symbol& s : alphabet.tokens()) {
                Word v = u;
                v += s;
                if (l.contains(v)) out.push_back(v);
                next.push_back(std::move(v));
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace synkit
