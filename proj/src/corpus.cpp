#include "synkit/corpus.hpp"

#include "synkit/synchro.hpp"

namespace synkit {

Semiautomaton random_semiautomaton(int n, const Alphabet& alphabet, RandomSource& rng) {
    std::vector<State> delta(static_cast<std::size_t>(n) * alphabet.size());
    for (State& t : delta) t = rng.below(n);
    return Semiautomaton(n, alphabet, std::move(delta));
}

Word random_word(int len, const Alphabet& alphabet, RandomSource& rng) {
    std::vector<Symbol> syms;
    syms.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        syms.push_back(alphabet.symbol(rng.below(static_cast<int>(alphabet.size()))));
    return Word(std::move(syms));
}

Semiautomaton random_scs(int min_states, int max_states, const Alphabet& alphabet,
                         RandomSource& rng) {
    for (;;) {
        int n = min_states + rng.below(max_states - min_states + 1);
        Semiautomaton a = random_semiautomaton(n, alphabet, rng);
        if (a.is_strongly_connected() && is_synchronizing(a)) return a;
    }
}

std::vector<Semiautomaton> scs_corpus(int count, int min_states, int max_states,
                                      const Alphabet& alphabet, std::uint64_t seed) {
    RandomSource rng(seed);
    std::vector<Semiautomaton> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(random_scs(min_states, max_states, alphabet, rng));
    return out;
}

}  // namespace synkit
