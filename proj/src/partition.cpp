#include "synkit/partition.hpp"

#include <algorithm>
#include <numeric>

#include "synkit/errors.hpp"

namespace synkit {

namespace {

// Renumber block ids so they appear in order of their least member.
std::vector<int> normalize(std::vector<int> block_of) {
    std::vector<int> remap(block_of.size(), -1);
    int next = 0;
    for (int& b : block_of) {
        if (b < 0 || static_cast<std::size_t>(b) >= block_of.size())
            throw PreconditionError("partition block id out of range");
        if (remap[static_cast<std::size_t>(b)] < 0) remap[static_cast<std::size_t>(b)] = next++;
        b = remap[static_cast<std::size_t>(b)];
    }
    return block_of;
}

}  // namespace

Partition::Partition(std::vector<int> block_of) : block_of_(normalize(std::move(block_of))) {
    if (block_of_.empty()) throw PreconditionError("partition of an empty state set");
    count_ = *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

Partition Partition::from_blocks(int n, const std::vector<StateSet>& blocks) {
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw PreconditionError("partition block is empty");
        for (State q : blocks[b]) {
            if (q < 0 || q >= n) throw PreconditionError("partition state out of range");
            if (block_of[static_cast<std::size_t>(q)] != -1)
                throw PreconditionError("partition blocks overlap");
            block_of[static_cast<std::size_t>(q)] = static_cast<int>(b);
        }
    }
    for (int v : block_of)
        if (v == -1) throw PreconditionError("partition does not cover the state set");
    return Partition(std::move(block_of));
}

Partition Partition::singletons(int n) {
    std::vector<int> b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 0);
    return Partition(std::move(b));
}

Partition Partition::single_block(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::vector<StateSet> Partition::blocks() const {
    std::vector<StateSet> out(static_cast<std::size_t>(count_));
    for (State q = 0; q < num_states(); ++q)
        out[static_cast<std::size_t>(block_of(q))].push_back(q);
    return out;
}

bool is_congruence(const Semiautomaton& a, const Partition& p) {
    if (p.num_states() != a.num_states())
        throw PreconditionError("partition does not match the state set");
    for (int l = 0; l < a.num_letters(); ++l) {
        std::vector<int> target(static_cast<std::size_t>(p.index()), -1);
        for (State q = 0; q < a.num_states(); ++q) {
            int b = p.block_of(q);
            int img = p.block_of(a.step(q, l));
            if (target[static_cast<std::size_t>(b)] == -1)
                target[static_cast<std::size_t>(b)] = img;
            else if (target[static_cast<std::size_t>(b)] != img)
                return false;
        }
    }
    return true;
}

Semiautomaton quotient(const Semiautomaton& a, const Partition& p) {
    if (!is_congruence(a, p)) throw PreconditionError("partition is not a congruence");
    int m = p.index();
    int k = a.num_letters();
    std::vector<State> delta(static_cast<std::size_t>(m) * static_cast<std::size_t>(k), -1);
    for (State q = 0; q < a.num_states(); ++q) {
        for (int l = 0; l < k; ++l) {
            delta[static_cast<std::size_t>(p.block_of(q)) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(l)] = p.block_of(a.step(q, l));
        }
    }
    return Semiautomaton(m, a.alphabet(), std::move(delta));
}

Acceptor quotient(const Acceptor& a, const Partition& p) {
    Semiautomaton q = quotient(a.base(), p);
    StateSet finals;
    for (State s : a.finals()) finals.push_back(p.block_of(s));
    return Acceptor(std::move(q), p.block_of(a.initial()), make_state_set(std::move(finals)));
}

std::vector<Partition> enumerate_congruences(const Semiautomaton& a, int max_index) {
    if (max_index < 1) throw PreconditionError("max_index must be at least 1");
    int n = a.num_states();
    if (n > 10)
        throw PreconditionError("congruence enumeration is capped at 10 states, got " +
                                std::to_string(n));
    std::vector<Partition> out;
    // Restricted-growth strings in lexicographic order: rgs[0] = 0 and
    // rgs[i] <= max(rgs[0..i-1]) + 1; blocks exceeding max_index are pruned.
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int used_blocks) -> void {
        if (i == n) {
            Partition p(rgs);
            if (is_congruence(a, p)) out.push_back(std::move(p));
            return;
        }
        int limit = std::min(used_blocks, max_index - 1);
        for (int v = 0; v <= limit; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(used_blocks, v + 1));
        }
    };
    rec(rec, 1, 1);
    return out;
}

HomomorphismCheck check_homomorphism(const StateMap& phi, const Semiautomaton& a,
                                     const Semiautomaton& b) {
    if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
    if (phi.images.size() != static_cast<std::size_t>(a.num_states()))
        throw PreconditionError("state map does not cover the source state set");
    for (State q : phi.images)
        if (q < 0 || q >= b.num_states()) throw PreconditionError("state map image out of range");

    HomomorphismCheck out;
    out.valid = true;
    for (State q = 0; q < a.num_states() && out.valid; ++q) {
        for (int l = 0; l < a.num_letters(); ++l) {
            State lhs = phi.images[static_cast<std::size_t>(a.step(q, l))];
            State rhs = b.step(phi.images[static_cast<std::size_t>(q)], l);
            if (lhs != rhs) {
                out.valid = false;
                break;
            }
        }
    }
    StateSet image = make_state_set(phi.images);
    out.surjective = static_cast<int>(image.size()) == b.num_states();
    return out;
}

Partition kernel(const StateMap& phi) {
    std::vector<int> block_of(phi.images.size());
    std::vector<int> remap;
    for (std::size_t q = 0; q < phi.images.size(); ++q) {
        State img = phi.images[q];
        if (static_cast<std::size_t>(img) >= remap.size())
            remap.resize(static_cast<std::size_t>(img) + 1, -1);
        if (remap[static_cast<std::size_t>(img)] < 0)
            remap[static_cast<std::size_t>(img)] = static_cast<int>(q);  // provisional: least preimage
        block_of[q] = remap[static_cast<std::size_t>(img)];
    }
    return Partition(std::move(block_of));
}

Semiautomaton subautomaton(const Semiautomaton& a, const StateSet& states) {
    std::vector<int> newid(static_cast<std::size_t>(a.num_states()), -1);
    for (std::size_t i = 0; i < states.size(); ++i)
        newid[static_cast<std::size_t>(states[i])] = static_cast<int>(i);
    int k = a.num_letters();
    std::vector<State> delta(states.size() * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (int l = 0; l < k; ++l) {
            State t = a.step(states[i], l);
            if (newid[static_cast<std::size_t>(t)] < 0)
                throw PreconditionError("state set is not closed under the letters");
            delta[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] =
                newid[static_cast<std::size_t>(t)];
        }
    }
    return Semiautomaton(static_cast<int>(states.size()), a.alphabet(), std::move(delta));
}

namespace {

using PairFilter = bool (*)(State, State, const void*);

// Extend a partial bijection by synchronized BFS from the root pair
// (ra, rb). Newly mapped source states are appended to `trail` so the
// caller can roll back. The commuting condition is verified on every edge
// explored, including edges into previously mapped states.
bool extend_sync(const Semiautomaton& a, State ra, const Semiautomaton& b, State rb,
                 std::vector<State>& map, std::vector<bool>& used, std::vector<State>& trail,
                 PairFilter ok, const void* ctx) {
    if (ok && !ok(ra, rb, ctx)) return false;
    map[static_cast<std::size_t>(ra)] = rb;
    used[static_cast<std::size_t>(rb)] = true;
    trail.push_back(ra);
    std::vector<State> queue{ra};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State q = queue[head];
        for (int l = 0; l < a.num_letters(); ++l) {
            State ta = a.step(q, l);
            State tb = b.step(map[static_cast<std::size_t>(q)], l);
            State& slot = map[static_cast<std::size_t>(ta)];
            if (slot == -1) {
                if (used[static_cast<std::size_t>(tb)]) return false;
                if (ok && !ok(ta, tb, ctx)) return false;
                slot = tb;
                used[static_cast<std::size_t>(tb)] = true;
                trail.push_back(ta);
                queue.push_back(ta);
            } else if (slot != tb) {
                return false;
            }
        }
    }
    return true;
}

void roll_back(std::vector<State>& map, std::vector<bool>& used, std::vector<State>& trail,
               std::size_t mark) {
    while (trail.size() > mark) {
        State q = trail.back();
        trail.pop_back();
        used[static_cast<std::size_t>(map[static_cast<std::size_t>(q)])] = false;
        map[static_cast<std::size_t>(q)] = -1;
    }
}

// Component-wise backtracking over root anchors; handles semiautomata that
// are not reachable from a single state.
bool backtrack_iso(const Semiautomaton& a, const Semiautomaton& b, std::vector<State>& map,
                   std::vector<bool>& used, std::vector<State>& trail, PairFilter ok,
                   const void* ctx) {
    State q = -1;
    for (State i = 0; i < a.num_states(); ++i) {
        if (map[static_cast<std::size_t>(i)] == -1) {
            q = i;
            break;
        }
    }
    if (q == -1) return true;  // every edge was checked as its source was dequeued
    for (State t = 0; t < b.num_states(); ++t) {
        if (used[static_cast<std::size_t>(t)]) continue;
        std::size_t mark = trail.size();
        if (extend_sync(a, q, b, t, map, used, trail, ok, ctx) &&
            backtrack_iso(a, b, map, used, trail, ok, ctx))
            return true;
        roll_back(map, used, trail, mark);
    }
    return false;
}

struct AcceptorPair {
    const Acceptor* a;
    const Acceptor* b;
};

bool finals_compatible(State sa, State sb, const void* ctx) {
    const auto* pair = static_cast<const AcceptorPair*>(ctx);
    return pair->a->is_final(sa) == pair->b->is_final(sb);
}

}  // namespace

bool is_isomorphic(const Semiautomaton& a, const Semiautomaton& b) {
    if (a.num_states() != b.num_states()) return false;
    if (!(a.alphabet() == b.alphabet())) return false;
    std::vector<State> map(static_cast<std::size_t>(a.num_states()), -1);
    std::vector<bool> used(static_cast<std::size_t>(b.num_states()), false);
    std::vector<State> trail;
    return backtrack_iso(a, b, map, used, trail, nullptr, nullptr);
}

bool is_isomorphic(const Acceptor& a, const Acceptor& b) {
    if (a.num_states() != b.num_states()) return false;
    if (!(a.alphabet() == b.alphabet())) return false;
    if (a.finals().size() != b.finals().size()) return false;
    // roots are pinned to the initial states
    AcceptorPair ctx{&a, &b};
    std::vector<State> map(static_cast<std::size_t>(a.num_states()), -1);
    std::vector<bool> used(static_cast<std::size_t>(b.num_states()), false);
    std::vector<State> trail;
    if (!extend_sync(a.base(), a.initial(), b.base(), b.initial(), map, used, trail,
                     &finals_compatible, &ctx))
        return false;
    return backtrack_iso(a.base(), b.base(), map, used, trail, &finals_compatible, &ctx);
}

}  // namespace synkit
