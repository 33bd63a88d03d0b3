#include "synkit/aw.hpp"

#include <algorithm>

#include "synkit/errors.hpp"
#include "synkit/language.hpp"
#include "synkit/minimize.hpp"
#include "synkit/partition.hpp"
#include "synkit/synchro.hpp"

namespace synkit {

std::vector<int> failure_table(const Word& w) {
    std::vector<int> fail(w.size() + 1, 0);
    int border = 0;
    for (std::size_t i = 2; i <= w.size(); ++i) {
        while (border > 0 && w[static_cast<std::size_t>(border)] != w[i - 1])
            border = fail[static_cast<std::size_t>(border)];
        if (w[static_cast<std::size_t>(border)] == w[i - 1]) ++border;
        fail[i] = border;
    }
    return fail;
}

PrefixMatcher::PrefixMatcher(Word w) : w_(std::move(w)), fail_(failure_table(w_)) {}

int PrefixMatcher::step(int state, const Symbol& a) const {
    int len = static_cast<int>(w_.size());
    if (len == 0) return 0;
    int s = state;
    if (s == len) s = fail_[static_cast<std::size_t>(s)];
    while (s > 0 && w_[static_cast<std::size_t>(s)] != a) s = fail_[static_cast<std::size_t>(s)];
    if (w_[static_cast<std::size_t>(s)] == a) ++s;
    return s;
}

int PrefixMatcher::match_length(const Word& u) const {
    int state = 0;
    for (const Symbol& a : u) state = step(state, a);
    return state;
}

Word suffix_prefix_match(const Word& u, const Word& w) {
    if (w.empty()) return Word{};
    PrefixMatcher matcher(w);
    return w.prefix(static_cast<std::size_t>(matcher.match_length(u)));
}

Acceptor build_aw(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) throw PreconditionError("A_w requires a non-empty word");
    if (!alphabet.contains_word(w)) throw ParseError("word uses symbols outside the alphabet");
    PrefixMatcher matcher(w);
    int n = static_cast<int>(w.size()) + 1;
    int k = static_cast<int>(alphabet.size());
    std::vector<State> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l)
            delta[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(l)] = matcher.step(i, alphabet.symbol(l));
    State full = n - 1;
    return Acceptor(Semiautomaton(n, alphabet, std::move(delta)), full, {full});
}

AwReport verify_aw(const Word& w, const Alphabet& alphabet) {
    AwReport report;
    report.w = w;
    Acceptor aw = build_aw(w, alphabet);
    const Semiautomaton& base = aw.base();
    int n_states = base.num_states();
    auto add = [&report](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    add("state_count", n_states == static_cast<int>(w.size()) + 1,
        std::to_string(n_states) + " states");

    // canonical minimize renumbers from the initial state, so identity is
    // checked up to isomorphism together with the state count
    Acceptor minimized = minimize(aw);
    add("minimal", minimized.num_states() == n_states && is_isomorphic(minimized, aw));

    add("strongly_connected", base.is_strongly_connected());

    StateSet full_image = base.image(base.all_states(), w);
    add("w_resets", full_image == StateSet{static_cast<State>(w.size())});

    // every word of exactly |w| letters resets; by state-independence of
    // run(q, u) = u ^_s w for |u| >= |w| this covers all longer words
    bool all_reset = true;
    PrefixMatcher matcher(w);
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len < w.size(); ++len) {
        std::vector<Word> next;
        for (const Word& u : layer)
            for (const Symbol& s : alphabet.tokens()) next.push_back(u + Word({s}));
        layer = std::move(next);
    }
    for (const Word& u : layer) {
        StateSet img = base.image(base.all_states(), u);
        State expect = static_cast<State>(matcher.match_length(u));
        if (img != StateSet{expect}) {
            all_reset = false;
            break;
        }
    }
    add("length_w_words_reset", all_reset);

    bool fg = is_finitely_generated(base);
    add("finitely_generated", fg);

    Language syn_min = minimal_reset_words(base);
    auto longest = longest_word_length(syn_min);
    bool bounded = longest.has_value() && *longest <= static_cast<int>(w.size());
    add("minimal_reset_words_bounded", bounded,
        longest ? "longest " + std::to_string(*longest) : "infinite");

    return report;
}

}  // namespace synkit
