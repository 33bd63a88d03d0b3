#ifndef SYNKIT_CORPUS_HPP
#define SYNKIT_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "synkit/automaton.hpp"

namespace synkit {

/// Deterministic random source for reproducible corpora: std::mt19937_64
/// seeded directly, bounded draws by modulo. The mt19937_64 stream is
/// pinned by the C++ standard, so a seed identifies a corpus everywhere.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

private:
    std::mt19937_64 gen_;
};

/// Uniform total transition table.
Semiautomaton random_semiautomaton(int n, const Alphabet& alphabet, RandomSource& rng);

Word random_word(int len, const Alphabet& alphabet, RandomSource& rng);

/// Rejection-sampled strongly connected synchronizing automaton with a
/// uniform state count in [min_states, max_states].
Semiautomaton random_scs(int min_states, int max_states, const Alphabet& alphabet,
                         RandomSource& rng);

std::vector<Semiautomaton> scs_corpus(int count, int min_states, int max_states,
                                      const Alphabet& alphabet, std::uint64_t seed);

}  // namespace synkit

#endif  // SYNKIT_CORPUS_HPP
