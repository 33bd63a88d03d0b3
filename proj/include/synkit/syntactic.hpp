#ifndef SYNKIT_SYNTACTIC_HPP
#define SYNKIT_SYNTACTIC_HPP

#include <set>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"

namespace synkit {

/// Element of the transition semigroup: a total self-map of the state set
/// of the minimal acceptor, with a shortest (then lexicographically least)
/// witness word.
struct Transformation {
    std::vector<State> images;
    Word witness;

    bool is_constant() const;
    bool operator==(const Transformation& other) const { return images == other.images; }
};

/// Closure of the letter transformations under composition, breadth-first
/// with de-duplication; the identity appears only if a non-empty word
/// realizes it. Computed on the canonical minimal acceptor.
std::vector<Transformation> transition_semigroup(const Acceptor& a,
                                                 std::size_t cap = kDefaultSemigroupCap);

/// Word classes of Proposition 3. fact: inner factors; suff: proper
/// non-empty suffixes outside fact; pref: proper non-empty prefixes that
/// are neither suffixes of w nor inner factors; pref_syn_adjusted: members
/// of pref that reset A_w.
struct WordClasses {
    std::set<Word> fact;
    std::set<Word> suff;
    std::set<Word> pref;
    std::set<Word> pref_syn_adjusted;
};

WordClasses word_classes(const Word& w, const Alphabet& alphabet);

struct SyntacticResult {
    long formula = 0;  // adjusted subtrahend |pref ∩ Syn(A_w)|
    long oracle = 0;   // transition-semigroup size
    WordClasses classes;
    long literal_subtrahend = 0;  // every non-empty prefix of w resetting A_w
    long literal_formula = 0;
    bool match() const { return formula == oracle; }
};

/// The closed-form syntactic complexity of w^{-1} Sigma^* w next to the
/// brute-force semigroup oracle. Both readings of the subtrahend are
/// reported; a mismatch is surfaced, never hidden.
SyntacticResult syntactic_complexity(const Word& w, const Alphabet& alphabet,
                                     std::size_t cap = kDefaultSemigroupCap);

}  // namespace synkit

#endif  // SYNKIT_SYNTACTIC_HPP
