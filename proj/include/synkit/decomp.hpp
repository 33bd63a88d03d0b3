#ifndef SYNKIT_DECOMP_HPP
#define SYNKIT_DECOMP_HPP

#include <utility>
#include <vector>

#include "synkit/check.hpp"
#include "synkit/errors.hpp"
#include "synkit/language.hpp"
#include "synkit/partition.hpp"

namespace synkit {

/// A family of languages indexed by 0..|parts|-1, intended to be a reset
/// left regular decomposition: disjoint left ideals whose union is the
/// reset-word language of the associated automaton.
struct Decomposition {
    Alphabet alphabet;
    std::vector<Language> parts;
};

/// The canonical decomposition of a strongly connected synchronizing
/// automaton: part q collects the words driving the whole state set onto q.
Decomposition extract_decomposition(const Semiautomaton& a,
                                    std::size_t cap = kDefaultSubsetCap);

struct DecompReport {
    std::vector<CheckItem> checks;
    bool passed() const { return all_pass(checks); }
};

/// Definition-1 verification: parts are non-empty left ideals, pairwise
/// disjoint, closed under letter append into a single part (condition i),
/// and whole-family right stabilizers stay inside the union (condition ii).
DecompReport verify_decomposition(const Decomposition& d, std::size_t cap = kDefaultSubsetCap);

/// The automaton with one state per part and transitions by the unique
/// letter-append inclusion. Inverse of extract_decomposition up to
/// isomorphism.
Semiautomaton automaton_of_decomposition(const Decomposition& d);

/// The lifted automaton of Theorem 6. States are the reachable
/// (source state, w-prefix) pairs realizing the sigma_w classes; the first
/// projection is a surjective homomorphism onto the source.
struct LiftResult {
    Acceptor b;
    Word w;
    StateMap phi;
    std::vector<std::pair<State, int>> class_labels;  // (source state, prefix length)
};

LiftResult lift(const Semiautomaton& a, std::size_t cap = kDefaultSubsetCap);

/// Same construction with an explicit reset word; lift() passes the
/// lexicographically least shortest one. Exposed so the necessity of
/// minimal |w| can be probed with longer reset words.
LiftResult lift_with_word(const Semiautomaton& a, const Word& w,
                          std::size_t cap = kDefaultSubsetCap);

struct LiftReport {
    std::vector<CheckItem> checks;
    bool passed() const { return all_pass(checks); }
};

/// Theorem-6 conformance of a lift result: recognized language, both
/// Syn inclusions, surjective homomorphism, quotient isomorphism, and the
/// shortest-reset norm chain.
LiftReport verify_lift(const Semiautomaton& a, const LiftResult& r,
                       std::size_t cap = kDefaultSubsetCap);

struct CernyProbeRow {
    int index = 0;
    int states = 0;
    int syn_norm = 0;
    int b_states = 0;
    int b_norm = 0;
    int congruences_checked = 0;
    bool thm1_equality = false;       // k = sqrt(||Syn||) + 1 exactly
    bool congruences_skipped = false; // lifted automaton above the enumeration cap
};

struct CernyProbeReport {
    std::vector<CernyProbeRow> rows;
    std::vector<std::string> violations;  // potential Cerny counterexamples
    bool zero_violations() const { return violations.empty(); }
};

/// Falsification probes: k >= sqrt(||Syn(A)||) + 1 per instance, and
/// ||Syn(B/rho)|| < ||Syn(B)|| for every congruence of the lifted B with
/// index below the Theorem-7 bound. Violations are reported, never dropped.
CernyProbeReport cerny_probes(const std::vector<Semiautomaton>& corpus,
                              std::size_t cap = kDefaultSubsetCap);

}  // namespace synkit

#endif  // SYNKIT_DECOMP_HPP
