#ifndef SYNKIT_POWER_HPP
#define SYNKIT_POWER_HPP

#include <functional>
#include <optional>

#include "synkit/automaton.hpp"

namespace synkit {

using SubsetStep = std::function<StateSet(const StateSet&, int)>;
using SubsetPredicate = std::function<bool(const StateSet&)>;

/// Deterministic closure over subset configurations under a custom step
/// rule, discovered breadth-first with letters in alphabet order.
/// config id 0 is the start configuration. Throws BudgetError past `cap`.
struct SubsetClosure {
    std::vector<StateSet> configs;
    Semiautomaton machine;  // transitions between config ids
};

SubsetClosure subset_closure(const Alphabet& alphabet, const StateSet& start,
                             const SubsetStep& step, std::size_t cap);

Acceptor subset_acceptor(const Alphabet& alphabet, const StateSet& start, const SubsetStep& step,
                         const SubsetPredicate& accept, std::size_t cap);

/// Power-automaton closure of a semiautomaton: configurations are images
/// of `start` under words, the step rule is element-wise application.
SubsetClosure power_closure(const Semiautomaton& a, const StateSet& start, std::size_t cap);

Acceptor power_acceptor(const Semiautomaton& a, const StateSet& start,
                        const SubsetPredicate& accept, std::size_t cap);

/// Shortest word (lexicographically least among shortest, in alphabet
/// order) from `start` to a configuration satisfying `target`; nullopt if
/// unreachable. `max_len` < 0 means unbounded.
std::optional<Word> power_search(const Semiautomaton& a, const StateSet& start,
                                 const SubsetPredicate& target, std::size_t cap,
                                 int max_len = -1);

}  // namespace synkit

#endif  // SYNKIT_POWER_HPP
