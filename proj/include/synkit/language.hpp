#ifndef SYNKIT_LANGUAGE_HPP
#define SYNKIT_LANGUAGE_HPP

#include <optional>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/minimize.hpp"

namespace synkit {

/// A regular language, held as its canonical minimal acceptor. Two handles
/// denote the same language iff their acceptors are structurally equal.
class Language {
public:
    static Language of(const Acceptor& a) { return Language(minimize(a)); }
    static Language empty(const Alphabet& alphabet);
    static Language all(const Alphabet& alphabet);  // Sigma^*
    static Language single_word(const Word& w, const Alphabet& alphabet);

    const Acceptor& acceptor() const { return acc_; }
    const Alphabet& alphabet() const { return acc_.alphabet(); }
    bool contains(const Word& u) const { return acc_.accepts(u); }

    bool operator==(const Language&) const = default;

private:
    explicit Language(Acceptor canonical) : acc_(std::move(canonical)) {}
    Acceptor acc_;
};

enum class SetOp { intersection, union_, difference };

Language combine(const Language& l1, const Language& l2, SetOp op);
Language intersection(const Language& l1, const Language& l2);
Language unite(const Language& l1, const Language& l2);
Language difference(const Language& l1, const Language& l2);
Language complement(const Language& l);

/// l1 includes l2, i.e. l2 is a subset of l1.
bool includes(const Language& l1, const Language& l2);
bool equals(const Language& l1, const Language& l2);
bool is_empty(const Language& l);
bool is_finite(const Language& l);
/// Length of a longest word; nullopt when the language is infinite,
/// -1 when it is empty.
std::optional<int> longest_word_length(const Language& l);

/// Lexicographically least among the shortest words; nullopt iff empty.
std::optional<Word> shortest_word(const Language& l);

/// w^{-1} L = { v : wv in L }
Language left_quotient(const Language& l, const Word& w);
/// L w^{-1} = { v : vw in L }
Language right_quotient(const Language& l, const Word& w);

struct IdealKind {
    bool left = false;
    bool right = false;
    bool two_sided = false;
};
IdealKind ideal_kind(const Language& l);

/// Sigma^* w Sigma^*
Language principal_ideal(const Word& w, const Alphabet& alphabet);
/// Sigma^* w
Language left_principal(const Word& w, const Alphabet& alphabet);

Language prepend_closure(const Language& l);  // Sigma^* L
Language prepend_plus(const Language& l);     // Sigma^+ L
Language append_plus(const Language& l);      // L Sigma^+

/// All accepted words of length <= max_len, ordered by length then
/// alphabet-lexicographically.
std::vector<Word> words_up_to(const Language& l, int max_len);

}  // namespace synkit

#endif  // SYNKIT_LANGUAGE_HPP
