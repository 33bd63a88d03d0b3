#ifndef SYNKIT_PARTITION_HPP
#define SYNKIT_PARTITION_HPP

#include <vector>

#include "synkit/automaton.hpp"

namespace synkit {

/// Partition of the state set 0..n-1 into disjoint non-empty blocks.
/// Stored in restricted-growth normal form: block ids appear in order of
/// their least member, so equal partitions compare equal.
class Partition {
public:
    explicit Partition(std::vector<int> block_of);
    static Partition from_blocks(int n, const std::vector<StateSet>& blocks);
    static Partition singletons(int n);
    static Partition single_block(int n);

    int num_states() const { return static_cast<int>(block_of_.size()); }
    int index() const { return count_; }
    int block_of(State q) const { return block_of_[static_cast<std::size_t>(q)]; }
    std::vector<StateSet> blocks() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> block_of_;
    int count_;
};

/// Closure of each block under every letter. Closure under single letters
/// already gives closure under all words, so this is the exact congruence
/// test from the definition.
bool is_congruence(const Semiautomaton& a, const Partition& p);

Semiautomaton quotient(const Semiautomaton& a, const Partition& p);
/// Acceptor quotient: initial class [q0], final classes F/rho.
Acceptor quotient(const Acceptor& a, const Partition& p);

/// All congruences of index <= max_index, each exactly once, in
/// restricted-growth enumeration order of the underlying partitions.
/// Refuses automata with more than 10 states.
std::vector<Partition> enumerate_congruences(const Semiautomaton& a, int max_index);

/// Total map from the states of one semiautomaton to another.
struct StateMap {
    std::vector<State> images;
};

struct HomomorphismCheck {
    bool valid = false;
    bool surjective = false;
};

/// Checks the letter-action commuting condition for every (state, letter).
HomomorphismCheck check_homomorphism(const StateMap& phi, const Semiautomaton& a,
                                     const Semiautomaton& b);

/// Partition of the source states by equal image.
Partition kernel(const StateMap& phi);

/// Sub-semiautomaton induced by a letter-closed state set, states
/// renumbered by ascending original id.
Semiautomaton subautomaton(const Semiautomaton& a, const StateSet& states);

bool is_isomorphic(const Semiautomaton& a, const Semiautomaton& b);
bool is_isomorphic(const Acceptor& a, const Acceptor& b);

}  // namespace synkit

#endif  // SYNKIT_PARTITION_HPP
