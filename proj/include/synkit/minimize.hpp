#ifndef SYNKIT_MINIMIZE_HPP
#define SYNKIT_MINIMIZE_HPP

#include "synkit/automaton.hpp"

namespace synkit {

/// Canonical minimization: drops unreachable states, merges states with
/// equal right languages, and renumbers breadth-first from the initial
/// state with alphabet-order tie-breaking. Two acceptors recognize the
/// same language iff their minimized forms are structurally equal.
Acceptor minimize(const Acceptor& a);

}  // namespace synkit

#endif  // SYNKIT_MINIMIZE_HPP
