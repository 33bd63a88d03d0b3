#ifndef SYNKIT_CONSTANTS_HPP
#define SYNKIT_CONSTANTS_HPP

#include <optional>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"
#include "synkit/language.hpp"

namespace synkit {

// Schuetzenberger constants of a regular language L, decided on its
// minimal acceptor A_L. Every entry point minimizes its input, so the
// verdicts are language-level.

/// The unique non-accepting sink of a minimal acceptor, if present.
std::optional<State> find_sink(const Acceptor& a_l);

/// u is a constant for L: |Q.u| <= 2 when A_L has a non-accepting sink
/// (the sink is always in the image), |Q.u| = 1 otherwise.
bool is_constant(const Acceptor& a_l, const Word& u);

/// The CONSTANT decision via pairwise collapsing in P^[2]: with a sink,
/// every pair of distinct non-sink states must reach a singleton or a
/// sink-containing pair; without a sink this is plain synchronizability.
bool has_constant(const Acceptor& a_l);

/// Independent oracle: breadth-first power-automaton search from Q to any
/// configuration passing the constant threshold.
bool has_constant_oracle(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);

/// Constructive squeezing loop: repeatedly collapse a pair of non-sink
/// states in the current image until the threshold holds. Returns the
/// concatenated witness, or nullopt when no constant exists.
std::optional<Word> find_constant(const Acceptor& a_l);

/// C(L), the language of all constants.
Language constants_language(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);

/// Syn^par(A_L): words with image inside {s, q} for some q. Requires a sink.
Language partial_syn_language(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);

/// Z(L) = { u : Sigma^* u Sigma^* ∩ L = empty }, the non-factors of L.
Language z_language(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);
bool z_nonempty(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);

/// True iff some reachable state of the minimal acceptor is dead, which
/// for complete minimal acceptors pins down a right ideal inside the
/// complement.
bool complement_contains_right_ideal(const Acceptor& a_l);

struct PropCheck {
    bool criterion = false;
    bool direct = false;
    bool agree() const { return criterion == direct; }
};

/// Proposition 5: A_L synchronizing with L ∩ Syn(A_L) non-empty iff
/// C(L) non-empty and the complement contains no right ideal.
PropCheck prop5_check(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);

/// Proposition 6: A_L synchronizing with L ∩ Syn(A_L) empty iff
/// Z(L) non-empty and the complement contains a right ideal.
PropCheck prop6_check(const Acceptor& a_l, std::size_t cap = kDefaultSubsetCap);

}  // namespace synkit

#endif  // SYNKIT_CONSTANTS_HPP
