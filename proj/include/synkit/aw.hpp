#ifndef SYNKIT_AW_HPP
#define SYNKIT_AW_HPP

#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/check.hpp"

namespace synkit {

/// Classical border table of w: fail[i] (1 <= i <= |w|) is the length of
/// the longest proper suffix of w[1..i] that is also a prefix of w.
std::vector<int> failure_table(const Word& w);

/// Incremental matcher for the suffix-prefix operator against a fixed w.
/// States are prefix lengths 0..|w|; step(i, a) is the length of the
/// longest suffix of w[1..i]a that is a prefix of w.
class PrefixMatcher {
public:
    explicit PrefixMatcher(Word w);

    const Word& pattern() const { return w_; }
    int step(int state, const Symbol& a) const;
    /// Feeds u starting from the empty prefix; the final state is |u ^_s w|.
    int match_length(const Word& u) const;

private:
    Word w_;
    std::vector<int> fail_;
};

/// u ^_s w: the longest word that is both a suffix of u and a prefix of w.
Word suffix_prefix_match(const Word& u, const Word& w);

/// The minimal acceptor A_w of w^{-1} Sigma^* w on the prefix states of w,
/// with initial = final = the full prefix.
Acceptor build_aw(const Word& w, const Alphabet& alphabet);

struct AwReport {
    Word w;
    std::vector<CheckItem> checks;
    bool passed() const { return all_pass(checks); }
};

/// Structural and synchronization properties of A_w: state count, minimality,
/// strong connectivity, w as reset word, every length-|w| word resets,
/// finite generation, and the length bound on minimal reset words.
AwReport verify_aw(const Word& w, const Alphabet& alphabet);

}  // namespace synkit

#endif  // SYNKIT_AW_HPP
