#include "synkit/decomp.hpp"

#include <algorithm>
#include <map>

#include "synkit/aw.hpp"
#include "synkit/power.hpp"
#include "synkit/synchro.hpp"

namespace synkit {

namespace {

void require_scs(const Semiautomaton& a) {
    if (!a.is_strongly_connected())
        throw PreconditionError("automaton is not strongly connected");
    if (!is_synchronizing(a)) throw PreconditionError("automaton is not synchronizing");
}

// A_i-states reachable while accepting in A_j, i.e. { q0_i . v : v in I_j }.
StateSet landing_states(const Acceptor& a_j, const Acceptor& a_i) {
    int ni = a_i.num_states();
    int k = a_i.base().num_letters();
    auto encode = [ni](State x, State y) { return x * ni + y; };
    std::vector<bool> seen(static_cast<std::size_t>(a_j.num_states() * ni), false);
    std::vector<std::pair<State, State>> queue{{a_j.initial(), a_i.initial()}};
    seen[static_cast<std::size_t>(encode(a_j.initial(), a_i.initial()))] = true;
    StateSet out;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [x, y] = queue[head];
        if (a_j.is_final(x)) out.push_back(y);
        for (int l = 0; l < k; ++l) {
            State tx = a_j.base().step(x, l);
            State ty = a_i.base().step(y, l);
            if (!seen[static_cast<std::size_t>(encode(tx, ty))]) {
                seen[static_cast<std::size_t>(encode(tx, ty))] = true;
                queue.emplace_back(tx, ty);
            }
        }
    }
    return make_state_set(std::move(out));
}

// U_{j,i} = { u : I_j u ⊆ I_i }, via the power automaton of A_i started at
// the landing states of I_j.
Language stabilizer_into(const Acceptor& a_j, const Acceptor& a_i, std::size_t cap) {
    StateSet start = landing_states(a_j, a_i);
    StateSet finals = a_i.finals();
    auto accept = [finals](const StateSet& s) {
        return std::all_of(s.begin(), s.end(), [&finals](State q) { return set_contains(finals, q); });
    };
    return Language::of(power_acceptor(a_i.base(), start, accept, cap));
}

}  // namespace

Decomposition extract_decomposition(const Semiautomaton& a, std::size_t cap) {
    require_scs(a);
    Decomposition d;
    d.alphabet = a.alphabet();
    StateSet full = a.all_states();
    for (State q = 0; q < a.num_states(); ++q) {
        auto accept = [q](const StateSet& s) { return s == StateSet{q}; };
        d.parts.push_back(Language::of(power_acceptor(a, full, accept, cap)));
    }
    return d;
}

DecompReport verify_decomposition(const Decomposition& d, std::size_t cap) {
    DecompReport report;
    auto add = [&report](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    std::size_t m = d.parts.size();
    if (m == 0) {
        add("non_empty_family", false, "no parts");
        return report;
    }
    for (const Language& part : d.parts) {
        if (!(part.alphabet() == d.alphabet)) throw AlphabetMismatch();
    }

    bool left_ideals = true;
    std::string left_detail;
    for (std::size_t i = 0; i < m; ++i) {
        if (!ideal_kind(d.parts[i]).left) {
            left_ideals = false;
            left_detail = "part " + std::to_string(i) + " is not a left ideal";
            break;
        }
    }
    add("left_ideals", left_ideals, left_detail);

    bool disjoint = true;
    std::string disjoint_detail;
    for (std::size_t i = 0; i < m && disjoint; ++i) {
        for (std::size_t j = i + 1; j < m && disjoint; ++j) {
            if (!is_empty(intersection(d.parts[i], d.parts[j]))) {
                disjoint = false;
                disjoint_detail =
                    "parts " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
            }
        }
    }
    add("disjoint", disjoint, disjoint_detail);

    // condition (i): every I_i a lies inside some I_j
    bool cond1 = true;
    std::string cond1_detail;
    for (std::size_t i = 0; i < m && cond1; ++i) {
        for (const Symbol& s : d.alphabet.tokens()) {
            Word letter({s});
            bool found = false;
            for (std::size_t j = 0; j < m && !found; ++j) {
                if (includes(right_quotient(d.parts[j], letter), d.parts[i])) found = true;
            }
            if (!found) {
                cond1 = false;
                cond1_detail = "no target for part " + std::to_string(i) + " on letter " + s;
                break;
            }
        }
    }
    add("condition_i", cond1, cond1_detail);

    // condition (ii): ∪_i ∩_j U_{j,i} must stay inside ∪_i I_i
    Language union_parts = d.parts[0];
    for (std::size_t i = 1; i < m; ++i) union_parts = unite(union_parts, d.parts[i]);
    Language lhs = Language::empty(d.alphabet);
    for (std::size_t i = 0; i < m; ++i) {
        Language inter = stabilizer_into(d.parts[0].acceptor(), d.parts[i].acceptor(), cap);
        for (std::size_t j = 1; j < m; ++j) {
            inter = intersection(
                inter, stabilizer_into(d.parts[j].acceptor(), d.parts[i].acceptor(), cap));
        }
        lhs = unite(lhs, inter);
    }
    add("condition_ii", includes(union_parts, lhs));

    return report;
}

Semiautomaton automaton_of_decomposition(const Decomposition& d) {
    std::size_t m = d.parts.size();
    if (m == 0) throw PreconditionError("decomposition has no parts");
    int k = static_cast<int>(d.alphabet.size());
    std::vector<State> delta(m * static_cast<std::size_t>(k), -1);
    for (std::size_t i = 0; i < m; ++i) {
        for (int l = 0; l < k; ++l) {
            Word letter({d.alphabet.symbol(l)});
            int target = -1;
            for (std::size_t j = 0; j < m; ++j) {
                if (includes(right_quotient(d.parts[j], letter), d.parts[i])) {
                    target = static_cast<int>(j);
                    break;
                }
            }
            if (target < 0)
                throw PreconditionError("invalid decomposition: no inclusion target for part " +
                                        std::to_string(i) + " on letter " + d.alphabet.symbol(l));
            delta[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] = target;
        }
    }
    return Semiautomaton(static_cast<int>(m), d.alphabet, std::move(delta));
}

LiftResult lift_with_word(const Semiautomaton& a, const Word& w, std::size_t cap) {
    require_scs(a);
    if (!a.alphabet().contains_word(w)) throw ParseError("word uses symbols outside the alphabet");
    StateSet after_w = a.image(a.all_states(), w);
    if (after_w.size() != 1) throw PreconditionError("the given word is not a reset word");
    State landing = after_w[0];
    int wlen = static_cast<int>(w.size());
    int k = a.num_letters();
    PrefixMatcher matcher(w);

    // reachable closure of the pair dynamics (source state, w-prefix)
    auto encode = [wlen](State q, int p) { return q * (wlen + 1) + p; };
    std::map<int, int> ids;
    std::vector<std::pair<State, int>> labels;
    std::vector<State> delta;
    labels.emplace_back(landing, wlen);
    ids.emplace(encode(landing, wlen), 0);
    for (std::size_t head = 0; head < labels.size(); ++head) {
        auto [q, p] = labels[head];
        for (int l = 0; l < k; ++l) {
            State tq = a.step(q, l);
            int tp = matcher.step(p, a.alphabet().symbol(l));
            auto [it, inserted] = ids.emplace(encode(tq, tp), static_cast<int>(labels.size()));
            if (inserted) {
                if (labels.size() >= cap)
                    throw BudgetError("lift closure exceeded the cap");
                labels.emplace_back(tq, tp);
            }
            delta.push_back(it->second);
        }
    }

    LiftResult out{
        Acceptor(Semiautomaton(static_cast<int>(labels.size()), a.alphabet(), std::move(delta)),
                 0, {0}),
        w,
        StateMap{},
        labels};
    out.phi.images.reserve(labels.size());
    for (const auto& [q, p] : labels) out.phi.images.push_back(q);
    return out;
}

LiftResult lift(const Semiautomaton& a, std::size_t cap) {
    require_scs(a);
    if (a.num_states() == 1) return lift_with_word(a, Word{}, cap);
    SynReport sr = shortest_reset(a, cap);
    return lift_with_word(a, *sr.shortest, cap);
}

LiftReport verify_lift(const Semiautomaton& a, const LiftResult& r, std::size_t cap) {
    LiftReport report;
    auto add = [&report](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const Word& w = r.w;
    Language lang_b = Language::of(r.b);

    if (w.empty()) {
        add("language", equals(lang_b, Language::all(a.alphabet())));
    } else {
        Language expected = left_quotient(left_principal(w, a.alphabet()), w);
        add("language", equals(lang_b, expected));
    }

    Language syn_b = syn_language(r.b.base(), cap);
    Language syn_a = syn_language(a, cap);
    if (w.empty()) {
        add("syn_lower", r.b.num_states() == 1);
    } else {
        add("syn_lower", includes(syn_b, principal_ideal(w, a.alphabet())));
    }
    add("syn_upper", includes(syn_a, syn_b));

    HomomorphismCheck hom = check_homomorphism(r.phi, r.b.base(), a);
    add("homomorphism", hom.valid && hom.surjective,
        hom.valid ? (hom.surjective ? "" : "not surjective") : "commuting condition fails");

    bool quotient_iso = false;
    if (hom.valid) {
        Partition ker = kernel(r.phi);
        quotient_iso = is_isomorphic(quotient(r.b.base(), ker), a);
    }
    add("quotient_iso", quotient_iso);

    SynReport norm_a = shortest_reset(a, cap);
    SynReport norm_b = shortest_reset(r.b.base(), cap);
    bool norms = norm_a.threshold && norm_b.threshold &&
                 *norm_a.threshold == static_cast<int>(w.size()) &&
                 *norm_b.threshold == static_cast<int>(w.size());
    add("norms", norms,
        "||Syn(A)|| = " + std::to_string(norm_a.threshold.value_or(-1)) + ", |w| = " +
            std::to_string(w.size()) + ", ||Syn(B)|| = " +
            std::to_string(norm_b.threshold.value_or(-1)));

    return report;
}

CernyProbeReport cerny_probes(const std::vector<Semiautomaton>& corpus, std::size_t cap) {
    CernyProbeReport report;
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const Semiautomaton& a = corpus[idx];
        require_scs(a);
        CernyProbeRow row;
        row.index = static_cast<int>(idx);
        row.states = a.num_states();
        SynReport sr = shortest_reset(a, cap);
        row.syn_norm = *sr.threshold;

        // Theorem 1 direction, instantiated: k >= sqrt(||Syn||) + 1
        int n = row.states;
        if ((n - 1) * (n - 1) < row.syn_norm) {
            report.violations.push_back("instance " + std::to_string(idx) +
                                        ": states^2 bound violated, ||Syn|| = " +
                                        std::to_string(row.syn_norm) + " on " +
                                        std::to_string(n) + " states");
        }
        row.thm1_equality = (n - 1) * (n - 1) == row.syn_norm;

        LiftResult lifted = lift(a, cap);
        row.b_states = lifted.b.num_states();
        SynReport srb = shortest_reset(lifted.b.base(), cap);
        row.b_norm = *srb.threshold;
        if (row.b_norm != static_cast<int>(lifted.w.size()) || row.b_norm != row.syn_norm) {
            report.violations.push_back("instance " + std::to_string(idx) +
                                        ": lifted norm chain broken");
        }

        // Theorem 7 probe on congruences of index below sqrt(||Syn(B)||)+1
        int max_index = 0;
        for (int m = 1; m <= row.b_states; ++m)
            if ((m - 1) * (m - 1) < row.b_norm) max_index = m;
        if (max_index >= 1) {
            if (row.b_states > 10) {
                row.congruences_skipped = true;
            } else {
                for (const Partition& rho : enumerate_congruences(lifted.b.base(), max_index)) {
                    Semiautomaton bq = quotient(lifted.b.base(), rho);
                    if (!is_synchronizing(bq)) continue;
                    ++row.congruences_checked;
                    SynReport srq = shortest_reset(bq, cap);
                    if (!(*srq.threshold < row.b_norm)) {
                        report.violations.push_back(
                            "instance " + std::to_string(idx) + ": congruence of index " +
                            std::to_string(rho.index()) + " keeps ||Syn|| at " +
                            std::to_string(*srq.threshold));
                    }
                }
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace synkit
