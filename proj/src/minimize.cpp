#include "synkit/minimize.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace synkit {

Acceptor minimize(const Acceptor& a) {
    const Semiautomaton& base = a.base();
    int n = base.num_states();
    int k = base.num_letters();

    // reachable part, breadth-first in alphabet order
    std::vector<State> order;
    std::vector<int> idx(static_cast<std::size_t>(n), -1);
    order.push_back(a.initial());
    idx[static_cast<std::size_t>(a.initial())] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int l = 0; l < k; ++l) {
            State t = base.step(order[head], l);
            if (idx[static_cast<std::size_t>(t)] < 0) {
                idx[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    int m = static_cast<int>(order.size());

    // Moore refinement on the reachable part
    std::vector<int> cls(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cls[static_cast<std::size_t>(i)] = a.is_final(order[static_cast<std::size_t>(i)]) ? 1 : 0;
    int classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_to_class;
        std::vector<int> next(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(k) + 1);
            sig.push_back(cls[static_cast<std::size_t>(i)]);
            for (int l = 0; l < k; ++l) {
                State t = base.step(order[static_cast<std::size_t>(i)], l);
                sig.push_back(cls[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]);
            }
            auto [it, inserted] = sig_to_class.emplace(std::move(sig), static_cast<int>(sig_to_class.size()));
            next[static_cast<std::size_t>(i)] = it->second;
        }
        int next_classes = static_cast<int>(sig_to_class.size());
        bool stable = next_classes == classes;
        cls = std::move(next);
        classes = next_classes;
        if (stable) break;
    }

    // canonical numbering: BFS over classes from the initial class
    auto class_step = [&](int c, int l) {
        for (int i = 0; i < m; ++i) {
            if (cls[static_cast<std::size_t>(i)] == c) {
                State t = base.step(order[static_cast<std::size_t>(i)], l);
                return cls[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
            }
        }
        return -1;  // unreachable: every class is non-empty
    };
    std::vector<int> canon(static_cast<std::size_t>(classes), -1);
    std::vector<int> class_order;
    int initial_class = cls[0];
    canon[static_cast<std::size_t>(initial_class)] = 0;
    class_order.push_back(initial_class);
    for (std::size_t head = 0; head < class_order.size(); ++head) {
        for (int l = 0; l < k; ++l) {
            int t = class_step(class_order[head], l);
            if (canon[static_cast<std::size_t>(t)] < 0) {
                canon[static_cast<std::size_t>(t)] = static_cast<int>(class_order.size());
                class_order.push_back(t);
            }
        }
    }

    std::vector<State> delta(static_cast<std::size_t>(classes) * static_cast<std::size_t>(k));
    std::vector<bool> final_class(static_cast<std::size_t>(classes), false);
    for (int i = 0; i < m; ++i) {
        int c = canon[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])];
        if (a.is_final(order[static_cast<std::size_t>(i)])) final_class[static_cast<std::size_t>(c)] = true;
        for (int l = 0; l < k; ++l) {
            State t = base.step(order[static_cast<std::size_t>(i)], l);
            delta[static_cast<std::size_t>(c) * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] =
                canon[static_cast<std::size_t>(cls[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])])];
        }
    }
    StateSet finals;
    for (int c = 0; c < classes; ++c)
        if (final_class[static_cast<std::size_t>(c)]) finals.push_back(c);
    return Acceptor(Semiautomaton(classes, base.alphabet(), std::move(delta)), 0, finals);
}

}  // namespace synkit
