#ifndef SYNKIT_AUTOMATON_HPP
#define SYNKIT_AUTOMATON_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synkit/word.hpp"

namespace synkit {

using State = int;
/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

/// Complete deterministic transition system: states 0..n-1, an ordered
/// alphabet, and a total transition table.
class Semiautomaton {
public:
    Semiautomaton(int n_states, Alphabet alphabet, std::vector<State> delta);

    int num_states() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int num_letters() const { return static_cast<int>(alphabet_.size()); }

    State step(State q, int letter) const { return delta_[static_cast<std::size_t>(q) * k_ + letter]; }
    State run(State q, const Word& u) const;

    StateSet image_letter(const StateSet& states, int letter) const;
    StateSet image(const StateSet& states, const Word& u) const;
    StateSet all_states() const;

    bool is_strongly_connected() const;

    bool operator==(const Semiautomaton& other) const = default;

private:
    int n_;
    std::size_t k_;
    Alphabet alphabet_;
    std::vector<State> delta_;  // delta_[q * k_ + letter]
};

/// Semiautomaton plus initial state and final-state set.
class Acceptor {
public:
    Acceptor(Semiautomaton base, State initial, const StateSet& finals);

    const Semiautomaton& base() const { return base_; }
    State initial() const { return initial_; }
    bool is_final(State q) const { return final_[static_cast<std::size_t>(q)]; }
    StateSet finals() const;
    int num_states() const { return base_.num_states(); }
    const Alphabet& alphabet() const { return base_.alphabet(); }

    bool accepts(const Word& u) const { return is_final(base_.run(initial_, u)); }

    bool operator==(const Acceptor& other) const = default;

private:
    Semiautomaton base_;
    State initial_;
    std::vector<bool> final_;
};

/// Result of reading a `.aut` stream: an acceptor when `initial:` was
/// present, a bare semiautomaton otherwise.
struct ParsedAutomaton {
    Semiautomaton machine;
    std::optional<State> initial;
    StateSet finals;

    bool is_acceptor() const { return initial.has_value(); }
    Acceptor acceptor() const;
};

ParsedAutomaton parse_aut(std::istream& in);
ParsedAutomaton parse_aut_text(const std::string& text);
ParsedAutomaton parse_aut_file(const std::string& path);

std::string to_aut(const Semiautomaton& a);
std::string to_aut(const Acceptor& a);
std::string to_dot(const Semiautomaton& a);
std::string to_dot(const Acceptor& a);

// StateSet utilities (sorted unique vectors).
StateSet make_state_set(std::vector<State> states);
bool set_contains(const StateSet& set, State q);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersection(const StateSet& a, const StateSet& b);

}  // namespace synkit

#endif  // SYNKIT_AUTOMATON_HPP
