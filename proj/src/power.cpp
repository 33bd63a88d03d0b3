#include "synkit/power.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "synkit/errors.hpp"

namespace synkit {

SubsetClosure subset_closure(const Alphabet& alphabet, const StateSet& start,
                             const SubsetStep& step, std::size_t cap) {
    int k = static_cast<int>(alphabet.size());
    std::map<StateSet, int> ids;
    std::vector<StateSet> configs;
    std::vector<State> delta;
    configs.push_back(start);
    ids.emplace(start, 0);
    for (std::size_t head = 0; head < configs.size(); ++head) {
        for (int l = 0; l < k; ++l) {
            StateSet next = step(configs[head], l);
            auto it = ids.find(next);
            int id;
            if (it == ids.end()) {
                if (configs.size() >= cap)
                    throw BudgetError("subset construction exceeded the cap of " +
                                      std::to_string(cap) + " configurations");
                id = static_cast<int>(configs.size());
                configs.push_back(next);
                ids.emplace(std::move(next), id);
            } else {
                id = it->second;
            }
            delta.push_back(id);
        }
    }
    Semiautomaton machine(static_cast<int>(configs.size()), alphabet, std::move(delta));
    return SubsetClosure{std::move(configs), std::move(machine)};
}

Acceptor subset_acceptor(const Alphabet& alphabet, const StateSet& start, const SubsetStep& step,
                         const SubsetPredicate& accept, std::size_t cap) {
    SubsetClosure closure = subset_closure(alphabet, start, step, cap);
    StateSet finals;
    for (std::size_t i = 0; i < closure.configs.size(); ++i)
        if (accept(closure.configs[i])) finals.push_back(static_cast<State>(i));
    return Acceptor(std::move(closure.machine), 0, finals);
}

SubsetClosure power_closure(const Semiautomaton& a, const StateSet& start, std::size_t cap) {
    return subset_closure(
        a.alphabet(), start, [&a](const StateSet& s, int l) { return a.image_letter(s, l); },
        cap);
}

Acceptor power_acceptor(const Semiautomaton& a, const StateSet& start,
                        const SubsetPredicate& accept, std::size_t cap) {
    return subset_acceptor(
        a.alphabet(), start, [&a](const StateSet& s, int l) { return a.image_letter(s, l); },
        accept, cap);
}

std::optional<Word> power_search(const Semiautomaton& a, const StateSet& start,
                                 const SubsetPredicate& target, std::size_t cap, int max_len) {
    int k = a.num_letters();
    if (target(start)) return Word{};
    std::map<StateSet, int> ids;
    std::vector<StateSet> configs{start};
    ids.emplace(start, 0);
    struct Parent {
        int config;
        int letter;
        int depth;
    };
    std::vector<Parent> parents{{-1, -1, 0}};
    for (std::size_t head = 0; head < configs.size(); ++head) {
        int depth = parents[head].depth;
        if (max_len >= 0 && depth >= max_len) continue;
        for (int l = 0; l < k; ++l) {
            StateSet next = a.image_letter(configs[head], l);
            if (ids.count(next)) continue;
            if (configs.size() >= cap)
                throw BudgetError("subset search exceeded the cap of " + std::to_string(cap) +
                                  " configurations");
            int id = static_cast<int>(configs.size());
            ids.emplace(next, id);
            configs.push_back(next);
            parents.push_back({static_cast<int>(head), l, depth + 1});
            if (target(configs[static_cast<std::size_t>(id)])) {
                std::vector<Symbol> syms;
                for (int cur = id; parents[static_cast<std::size_t>(cur)].config >= 0;
                     cur = parents[static_cast<std::size_t>(cur)].config)
                    syms.push_back(a.alphabet().symbol(parents[static_cast<std::size_t>(cur)].letter));
                std::reverse(syms.begin(), syms.end());
                return Word(std::move(syms));
            }
        }
    }
    return std::nullopt;
}

}  // namespace synkit
