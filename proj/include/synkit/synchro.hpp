#ifndef SYNKIT_SYNCHRO_HPP
#define SYNKIT_SYNCHRO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"
#include "synkit/language.hpp"

namespace synkit {

/// Pair-collapsing check on P^[2]: true iff every 2-element subset can
/// reach a singleton. O(n^2 |Sigma|).
bool is_synchronizing(const Semiautomaton& a);

/// The reset-word language Syn(A), built by on-the-fly power closure from
/// the full state set and canonically minimized.
Language syn_language(const Semiautomaton& a, std::size_t cap = kDefaultSubsetCap);

struct SynReport {
    bool synchronizing = false;
    std::optional<Word> shortest;
    std::optional<int> threshold;
    std::optional<Language> language;
};

/// Shortest reset word by breadth-first search from the full state set;
/// lexicographically least among the shortest. The language slot is filled
/// only when requested.
SynReport shortest_reset(const Semiautomaton& a, std::size_t cap = kDefaultSubsetCap,
                         bool with_language = false);

/// m(u) and k(u): the largest subset fixed by u and the minimal power with
/// Q u^k = m(u). Iterates S <- S.u from Q until the fixpoint.
struct MaximalFixedSet {
    StateSet m;
    int k = 0;
};
MaximalFixedSet maximal_fixed_set(const Semiautomaton& a, const Word& u);

/// df(u) = |Q| - |Q.u|
int deficiency(const Semiautomaton& a, const Word& u);

/// Shortest tau (then lexicographically least) with df(u tau v) > k where
/// k = df(u) = df(v) > 1. Requires k < |Q| - 1 so the target deficiency is
/// attainable; searches lengths <= k+1 and raises TheoremViolation if that
/// guaranteed window is empty.
Word extend_deficiency(const Semiautomaton& a, const Word& u, const Word& v,
                       std::size_t cap = kDefaultSubsetCap);

struct Theorem4Verdict {
    enum class Kind { PowerResets, Sandwich } kind = Kind::PowerResets;
    int k = 0;         // k(v)
    Word tau;          // only for Sandwich
    Word composite;    // v^k or v^k tau v^k
};

/// The Theorem-4 dichotomy for a finitely generated synchronizing automaton:
/// either v^{k(v)} resets, or some tau with |tau| <= n-1 makes
/// v^{k(v)} tau v^{k(v)} reset.
Theorem4Verdict theorem4_witness(const Semiautomaton& a, const Word& v,
                                 std::size_t cap = kDefaultSubsetCap);

/// Syn_min(A) = Syn \ (Sigma^+ Syn  ∪  Syn Sigma^+)
Language minimal_reset_words(const Semiautomaton& a, std::size_t cap = kDefaultSubsetCap);

/// A synchronizing automaton is finitely generated iff Syn_min is finite.
bool is_finitely_generated(const Semiautomaton& a, std::size_t cap = kDefaultSubsetCap);

struct Theorem8Sample {
    StateSet s;
    Word u;
    bool agrees = false;
};

struct Theorem8Report {
    bool finitely_generated = false;
    int samples_checked = 0;
    int violations = 0;
    std::vector<Theorem8Sample> disagreements;
};

/// Samples reachable subsets S with 1 < |S| < |Q| and words u fixing S,
/// comparing Syn(S) with Syn(m(u)). Violations can occur only when the
/// automaton is not finitely generated.
Theorem8Report theorem8_probe(const Semiautomaton& a, int samples, int max_word_len = 6,
                              std::size_t cap = kDefaultSubsetCap);

/// Syn(S): resets of the sub-configuration S, i.e. the power-automaton
/// language from S with singleton finals.
Language syn_from(const Semiautomaton& a, const StateSet& s, std::size_t cap = kDefaultSubsetCap);

/// The Cerny automaton C_n: a cycles 0 -> 1 -> ... -> n-1 -> 0, b merges
/// 0 into 1 and fixes everything else.
Semiautomaton cerny_automaton(int n);

/// Streams every total transition table over n states in lexicographic
/// order of the image sequence. Refuses when n^(n |Sigma|) exceeds budget.
class SemiautomatonEnumerator {
public:
    SemiautomatonEnumerator(int n, Alphabet alphabet, std::size_t budget = kDefaultEnumBudget);

    std::uint64_t total() const { return total_; }
    std::optional<Semiautomaton> next();

private:
    int n_;
    Alphabet alphabet_;
    std::uint64_t total_;
    std::uint64_t emitted_ = 0;
    std::vector<State> table_;
};

struct RcSearchCount {
    int states = 0;
    std::uint64_t tables = 0;
    std::uint64_t synchronizing = 0;
    std::uint64_t witnesses = 0;
};

struct RcSearchReport {
    Word w;
    int n_max = 0;
    std::vector<RcSearchCount> counts;
    std::vector<std::string> witness_aut;  // serialized witnesses
};

/// Exhaustive search for n-state semiautomata with Syn = Sigma^* w Sigma^*,
/// for every n <= n_max. Theorem 5 predicts no witnesses for n <= |w| and
/// at least one for n = |w| + 1.
RcSearchReport rc_search(const Word& w, const Alphabet& alphabet, int n_max,
                         std::size_t budget = kDefaultEnumBudget,
                         std::size_t cap = kDefaultSubsetCap);

}  // namespace synkit

#endif  // SYNKIT_SYNCHRO_HPP
