#include "synkit/synchro.hpp"

#include <algorithm>
#include <map>

#include "synkit/power.hpp"

namespace synkit {

namespace {

bool is_singleton(const StateSet& s) { return s.size() == 1; }

std::string dump_instance(const Semiautomaton& a, const std::vector<Word>& words) {
    std::string out = "instance:\n" + to_aut(a);
    for (const Word& w : words) out += "word: " + w.str() + "\n";
    return out;
}

}  // namespace

bool is_synchronizing(const Semiautomaton& a) {
    int n = a.num_states();
    if (n == 1) return true;
    int k = a.num_letters();
    // nodes: unordered pairs {p,q}, p <= q; reverse BFS from the diagonal
    auto id = [n](State p, State q) { return p * n + q; };  // p <= q
    std::vector<std::vector<int>> radj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (State p = 0; p < n; ++p) {
        for (State q = p; q < n; ++q) {
            for (int l = 0; l < k; ++l) {
                State tp = a.step(p, l);
                State tq = a.step(q, l);
                if (tp > tq) std::swap(tp, tq);
                radj[static_cast<std::size_t>(id(tp, tq))].push_back(id(p, q));
            }
        }
    }
    std::vector<bool> collapses(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    for (State p = 0; p < n; ++p) {
        collapses[static_cast<std::size_t>(id(p, p))] = true;
        stack.push_back(id(p, p));
    }
    while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        for (int prev : radj[static_cast<std::size_t>(node)]) {
            if (!collapses[static_cast<std::size_t>(prev)]) {
                collapses[static_cast<std::size_t>(prev)] = true;
                stack.push_back(prev);
            }
        }
    }
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q)
            if (!collapses[static_cast<std::size_t>(id(p, q))]) return false;
    return true;
}

Language syn_language(const Semiautomaton& a, std::size_t cap) {
    return Language::of(power_acceptor(a, a.all_states(), is_singleton, cap));
}

SynReport shortest_reset(const Semiautomaton& a, std::size_t cap, bool with_language) {
    SynReport report;
    std::optional<Word> w = power_search(a, a.all_states(), is_singleton, cap);
    if (w) {
        report.synchronizing = true;
        report.threshold = static_cast<int>(w->size());
        report.shortest = std::move(w);
        if (with_language) report.language = syn_language(a, cap);
    }
    return report;
}

MaximalFixedSet maximal_fixed_set(const Semiautomaton& a, const Word& u) {
    if (u.empty()) throw PreconditionError("m(u) requires a non-empty word");
    MaximalFixedSet out;
    StateSet cur = a.all_states();
    for (;;) {
        StateSet next = a.image(cur, u);
        if (next == cur) break;
        cur = std::move(next);
        ++out.k;
    }
    out.m = std::move(cur);
    return out;
}

int deficiency(const Semiautomaton& a, const Word& u) {
    return a.num_states() - static_cast<int>(a.image(a.all_states(), u).size());
}

Word extend_deficiency(const Semiautomaton& a, const Word& u, const Word& v, std::size_t cap) {
    int n = a.num_states();
    int k = deficiency(a, u);
    if (k != deficiency(a, v)) throw PreconditionError("df(u) and df(v) differ");
    if (k <= 1) throw PreconditionError("deficiency must exceed 1");
    if (k >= n - 1)
        throw PreconditionError("deficiency " + std::to_string(k) +
                                " cannot be exceeded on " + std::to_string(n) + " states");
    if (!is_synchronizing(a)) throw PreconditionError("automaton is not synchronizing");
    StateSet start = a.image(a.all_states(), u);
    auto target = [&](const StateSet& s) {
        return static_cast<int>(a.image(s, v).size()) < n - k;
    };
    std::optional<Word> tau = power_search(a, start, target, cap, k + 1);
    if (!tau)
        throw TheoremViolation("no deficiency-increasing tau of length <= k+1 found\n" +
                               dump_instance(a, {u, v}));
    return *tau;
}

Theorem4Verdict theorem4_witness(const Semiautomaton& a, const Word& v, std::size_t cap) {
    if (v.empty()) throw PreconditionError("theorem 4 requires a non-empty word");
    if (!is_synchronizing(a)) throw PreconditionError("automaton is not synchronizing");
    if (!is_finitely_generated(a, cap))
        throw PreconditionError("automaton is not finitely generated");
    int n = a.num_states();
    MaximalFixedSet mk = maximal_fixed_set(a, v);
    Word power = v.pow(mk.k);
    Theorem4Verdict verdict;
    verdict.k = mk.k;
    if (mk.m.size() == 1 || n == 1) {
        verdict.kind = Theorem4Verdict::Kind::PowerResets;
        verdict.composite = power;
        return verdict;
    }
    StateSet after_power = a.image(a.all_states(), power);
    auto target = [&](const StateSet& s) { return a.image(s, power).size() == 1; };
    std::optional<Word> tau = power_search(a, after_power, target, cap, n - 1);
    if (!tau)
        throw TheoremViolation("no sandwich tau of length <= n-1 found\n" +
                               dump_instance(a, {v}));
    verdict.kind = Theorem4Verdict::Kind::Sandwich;
    verdict.tau = *tau;
    verdict.composite = power + *tau + power;
    return verdict;
}

Language minimal_reset_words(const Semiautomaton& a, std::size_t cap) {
    Language syn = syn_language(a, cap);
    return difference(syn, unite(prepend_plus(syn), append_plus(syn)));
}

bool is_finitely_generated(const Semiautomaton& a, std::size_t cap) {
    if (!is_synchronizing(a)) throw PreconditionError("automaton is not synchronizing");
    return is_finite(minimal_reset_words(a, cap));
}

Language syn_from(const Semiautomaton& a, const StateSet& s, std::size_t cap) {
    return Language::of(power_acceptor(a, s, is_singleton, cap));
}

Theorem8Report theorem8_probe(const Semiautomaton& a, int samples, int max_word_len,
                              std::size_t cap) {
    Theorem8Report report;
    report.finitely_generated = is_finitely_generated(a, cap);
    int n = a.num_states();
    SubsetClosure closure = power_closure(a, a.all_states(), cap);

    std::map<StateSet, Language> syn_cache;
    auto syn_of = [&](const StateSet& s) -> const Language& {
        auto it = syn_cache.find(s);
        if (it == syn_cache.end()) it = syn_cache.emplace(s, syn_from(a, s, cap)).first;
        return it->second;
    };

    for (const StateSet& s : closure.configs) {
        if (static_cast<int>(s.size()) <= 1 || static_cast<int>(s.size()) >= n) continue;
        int found = 0;
        // words fixing S, by length then alphabet order
        std::vector<Word> layer{Word{}};
        for (int len = 1; len <= max_word_len && found < samples; ++len) {
            std::vector<Word> next;
            next.reserve(layer.size() * static_cast<std::size_t>(a.num_letters()));
            for (const Word& prefix : layer) {
                for (const Symbol& sym : a.alphabet().tokens()) next.push_back(prefix + Word({sym}));
            }
            layer = std::move(next);
            for (const Word& u : layer) {
                if (found >= samples) break;
                if (a.image(s, u) != s) continue;
                ++found;
                MaximalFixedSet mu = maximal_fixed_set(a, u);
                bool agrees = equals(syn_of(s), syn_of(mu.m));
                ++report.samples_checked;
                if (!agrees) {
                    ++report.violations;
                    report.disagreements.push_back({s, u, false});
                }
            }
        }
    }
    return report;
}

Semiautomaton cerny_automaton(int n) {
    if (n < 2) throw PreconditionError("C_n requires n >= 2");
    Alphabet alphabet({"a", "b"});
    std::vector<State> delta(static_cast<std::size_t>(n) * 2);
    for (State q = 0; q < n; ++q) {
        delta[static_cast<std::size_t>(q) * 2] = (q + 1) % n;       // a: cycle
        delta[static_cast<std::size_t>(q) * 2 + 1] = q == 0 ? 1 : q;  // b: merge 0 into 1
    }
    return Semiautomaton(n, alphabet, std::move(delta));
}

SemiautomatonEnumerator::SemiautomatonEnumerator(int n, Alphabet alphabet, std::size_t budget)
    : n_(n), alphabet_(std::move(alphabet)) {
    if (n_ < 1) throw PreconditionError("enumeration requires at least one state");
    std::size_t cells = static_cast<std::size_t>(n_) * alphabet_.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total > budget / static_cast<std::uint64_t>(n_))
            throw BudgetError("enumeration of " + std::to_string(n_) + "-state, " +
                              std::to_string(alphabet_.size()) +
                              "-letter tables exceeds the budget of " + std::to_string(budget));
        total *= static_cast<std::uint64_t>(n_);
    }
    total_ = total;
    table_.assign(cells, 0);
}

std::optional<Semiautomaton> SemiautomatonEnumerator::next() {
    if (emitted_ >= total_) return std::nullopt;
    Semiautomaton out(n_, alphabet_, table_);
    ++emitted_;
    // lexicographic increment of the image sequence
    for (std::size_t i = table_.size(); i-- > 0;) {
        if (++table_[i] < n_) break;
        table_[i] = 0;
    }
    return out;
}

RcSearchReport rc_search(const Word& w, const Alphabet& alphabet, int n_max, std::size_t budget,
                         std::size_t cap) {
    RcSearchReport report;
    report.w = w;
    report.n_max = n_max;
    Language ideal = principal_ideal(w, alphabet);
    int target_len = static_cast<int>(w.size());
    for (int n = 1; n <= n_max; ++n) {
        RcSearchCount count;
        count.states = n;
        SemiautomatonEnumerator gen(n, alphabet, budget);
        count.tables = gen.total();
        while (auto a = gen.next()) {
            if (!is_synchronizing(*a)) continue;
            ++count.synchronizing;
            // Syn = Sigma^* w Sigma^* forces the shortest reset length |w|
            SynReport sr = shortest_reset(*a, cap);
            if (!sr.threshold || *sr.threshold != target_len) continue;
            if (equals(syn_language(*a, cap), ideal)) {
                ++count.witnesses;
                report.witness_aut.push_back(to_aut(*a));
            }
        }
        report.counts.push_back(count);
    }
    return report;
}

}  // namespace synkit
