#include "synkit/syntactic.hpp"

#include <algorithm>
#include <map>

#include "synkit/aw.hpp"
#include "synkit/minimize.hpp"

namespace synkit {

bool Transformation::is_constant() const {
    return std::all_of(images.begin(), images.end(),
                       [this](State q) { return q == images[0]; });
}

std::vector<Transformation> transition_semigroup(const Acceptor& a, std::size_t cap) {
    Acceptor min = minimize(a);
    const Semiautomaton& base = min.base();
    int n = base.num_states();
    int k = base.num_letters();

    std::vector<std::vector<State>> letter_maps(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) {
        letter_maps[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(n));
        for (State q = 0; q < n; ++q)
            letter_maps[static_cast<std::size_t>(l)][static_cast<std::size_t>(q)] = base.step(q, l);
    }

    std::vector<Transformation> elements;
    std::map<std::vector<State>, int> seen;
    for (int l = 0; l < k; ++l) {
        const auto& images = letter_maps[static_cast<std::size_t>(l)];
        if (seen.emplace(images, static_cast<int>(elements.size())).second)
            elements.push_back({images, Word({base.alphabet().symbol(l)})});
    }
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (int l = 0; l < k; ++l) {
            std::vector<State> composed(static_cast<std::size_t>(n));
            for (State q = 0; q < n; ++q)
                composed[static_cast<std::size_t>(q)] = letter_maps[static_cast<std::size_t>(l)]
                    [static_cast<std::size_t>(elements[head].images[static_cast<std::size_t>(q)])];
            if (seen.emplace(composed, static_cast<int>(elements.size())).second) {
                if (elements.size() >= cap)
                    throw BudgetError("transition semigroup exceeded the cap of " +
                                      std::to_string(cap) + " elements");
                Word witness = elements[head].witness + Word({base.alphabet().symbol(l)});
                elements.push_back({std::move(composed), std::move(witness)});
            }
        }
    }
    return elements;
}

WordClasses word_classes(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) throw PreconditionError("word classes require a non-empty word");
    WordClasses out;
    std::size_t n = w.size();
    // inner factors: w = xuy with x, y non-empty
    for (std::size_t pos = 1; pos + 1 <= n; ++pos) {
        for (std::size_t len = 1; pos + len <= n - 1; ++len) out.fact.insert(w.subword(pos, len));
    }
    for (std::size_t len = 1; len < n; ++len) {
        Word s = w.suffix(len);
        if (!out.fact.count(s)) out.suff.insert(s);
    }
    std::set<Word> proper_suffixes;
    for (std::size_t len = 1; len < n; ++len) proper_suffixes.insert(w.suffix(len));
    for (std::size_t len = 1; len < n; ++len) {
        Word p = w.prefix(len);
        if (!proper_suffixes.count(p) && !out.fact.count(p)) out.pref.insert(p);
    }
    Acceptor aw = build_aw(w, alphabet);
    for (const Word& p : out.pref) {
        if (aw.base().image(aw.base().all_states(), p).size() == 1) out.pref_syn_adjusted.insert(p);
    }
    return out;
}

SyntacticResult syntactic_complexity(const Word& w, const Alphabet& alphabet, std::size_t cap) {
    SyntacticResult out;
    out.classes = word_classes(w, alphabet);
    long base_terms = static_cast<long>(w.size()) + 1 + static_cast<long>(out.classes.pref.size()) +
                      static_cast<long>(out.classes.fact.size()) +
                      static_cast<long>(out.classes.suff.size());
    out.formula = base_terms - static_cast<long>(out.classes.pref_syn_adjusted.size());

    Acceptor aw = build_aw(w, alphabet);
    for (std::size_t len = 1; len <= w.size(); ++len) {
        if (aw.base().image(aw.base().all_states(), w.prefix(len)).size() == 1)
            ++out.literal_subtrahend;
    }
    out.literal_formula = base_terms - out.literal_subtrahend;

    out.oracle = static_cast<long>(transition_semigroup(aw, cap).size());
    return out;
}

}  // namespace synkit
