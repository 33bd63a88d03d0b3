#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "synkit/aw.hpp"
#include "synkit/corpus.hpp"
#include "synkit/language.hpp"
#include "synkit/syntactic.hpp"

using namespace synkit;

namespace {

const Alphabet kAB({"a", "b"});

std::vector<Word> binary_words(int min_len, int max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    if (min_len == 0) out.push_back(Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& u : layer)
            for (const Symbol& s : kAB.tokens()) next.push_back(u + Word({s}));
        if (len >= min_len) out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::set<Word> words(std::initializer_list<const char*> texts) {
    std::set<Word> out;
    for (const char* t : texts) out.insert(Word::from_compact(t));
    return out;
}

}  // namespace

TEST_CASE("transition semigroup sizes") {
    SUBCASE("single state") {
        Acceptor one(Semiautomaton(1, kAB, {0, 0}), 0, {0});
        CHECK(transition_semigroup(one).size() == 1);
    }
    SUBCASE("A_ab has 4 elements: b plus three constants") {
        Acceptor aw = build_aw(Word::from_compact("ab"), kAB);
        auto semigroup = transition_semigroup(aw);
        CHECK(semigroup.size() == 4);
        int constants = 0;
        for (const Transformation& t : semigroup)
            if (t.is_constant()) ++constants;
        CHECK(constants == 3);
    }
    SUBCASE("A_aba has 7 elements with witnesses a, b, ba non-constant") {
        Acceptor aw = build_aw(Word::from_compact("aba"), kAB);
        auto semigroup = transition_semigroup(aw);
        CHECK(semigroup.size() == 7);
        std::set<Word> non_constant_witnesses;
        int constants = 0;
        for (const Transformation& t : semigroup) {
            if (t.is_constant())
                ++constants;
            else
                non_constant_witnesses.insert(t.witness);
        }
        CHECK(constants == 4);
        CHECK(non_constant_witnesses == words({"a", "b", "ba"}));
    }
    SUBCASE("size cap refuses") {
        Acceptor aw = build_aw(Word::from_compact("aba"), kAB);
        CHECK_THROWS_AS(transition_semigroup(aw, 3), BudgetError);
    }
}

TEST_CASE("semigroup size is invariant under state relabeling") {
    RandomSource rng(401);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + rng.below(3);
        Semiautomaton base = random_semiautomaton(n, kAB, rng);
        StateSet finals;
        for (State q = 0; q < n; ++q)
            if (rng.below(2)) finals.push_back(q);
        Acceptor acc(base, rng.below(n), finals);

        std::vector<State> perm;
        for (State q = 0; q < n; ++q) perm.push_back(q);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.below(i + 1))]);
        std::vector<State> delta(static_cast<std::size_t>(n) * 2);
        for (State q = 0; q < n; ++q)
            for (int l = 0; l < 2; ++l)
                delta[static_cast<std::size_t>(perm[static_cast<std::size_t>(q)]) * 2 +
                      static_cast<std::size_t>(l)] = perm[static_cast<std::size_t>(base.step(q, l))];
        StateSet relabeled_finals;
        for (State q : finals) relabeled_finals.push_back(perm[static_cast<std::size_t>(q)]);
        Acceptor relabeled(Semiautomaton(n, kAB, std::move(delta)),
                           perm[static_cast<std::size_t>(acc.initial())],
                           make_state_set(std::move(relabeled_finals)));
        CHECK(transition_semigroup(acc).size() == transition_semigroup(relabeled).size());
    }
}

TEST_CASE("word classes") {
    SUBCASE("w = aba") {
        WordClasses c = word_classes(Word::from_compact("aba"), kAB);
        CHECK(c.fact == words({"b"}));
        CHECK(c.suff == words({"a", "ba"}));
        CHECK(c.pref == words({"ab"}));
        CHECK(c.pref_syn_adjusted == words({"ab"}));
    }
    SUBCASE("w = ab") {
        WordClasses c = word_classes(Word::from_compact("ab"), kAB);
        CHECK(c.fact.empty());
        CHECK(c.suff == words({"b"}));
        CHECK(c.pref == words({"a"}));
        CHECK(c.pref_syn_adjusted == words({"a"}));
    }
    SUBCASE("w = a: everything empty") {
        WordClasses c = word_classes(Word::from_compact("a"), kAB);
        CHECK(c.fact.empty());
        CHECK(c.suff.empty());
        CHECK(c.pref.empty());
        CHECK(c.pref_syn_adjusted.empty());
    }
    SUBCASE("exhaustive definition check for |w| <= 5") {
        for (const Word& w : binary_words(1, 5)) {
            WordClasses c = word_classes(w, kAB);
            for (const Word& u : binary_words(1, static_cast<int>(w.size()))) {
                bool inner = false;
                for (std::size_t pos = 1; pos + u.size() + 1 <= w.size(); ++pos)
                    if (w.subword(pos, u.size()) == u) inner = true;
                CHECK(c.fact.count(u) == (inner ? 1u : 0u));
                bool proper_suffix = u.size() < w.size() && u.is_suffix_of(w);
                CHECK(c.suff.count(u) == (proper_suffix && !inner ? 1u : 0u));
                bool proper_prefix = u.size() < w.size() && u.is_prefix_of(w);
                CHECK(c.pref.count(u) == (proper_prefix && !proper_suffix && !inner ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("syntactic complexity formula = oracle") {
    SUBCASE("pinned probes: a, ab, aba") {
        SyntacticResult a = syntactic_complexity(Word::from_compact("a"), kAB);
        CHECK(a.formula == 2);
        CHECK(a.oracle == 2);
        SyntacticResult ab = syntactic_complexity(Word::from_compact("ab"), kAB);
        CHECK(ab.formula == 4);
        CHECK(ab.oracle == 4);
        CHECK(ab.classes.pref.size() == 1);
        CHECK(ab.classes.fact.empty());
        CHECK(ab.classes.suff.size() == 1);
        CHECK(ab.classes.pref_syn_adjusted.size() == 1);
        SyntacticResult aba = syntactic_complexity(Word::from_compact("aba"), kAB);
        CHECK(aba.formula == 7);
        CHECK(aba.oracle == 7);
    }
    SUBCASE("literal subtrahend disagrees on ab and aba") {
        // the whole-prefix reading counts w itself, which is always a reset
        // word, and under-counts the semigroup
        SyntacticResult ab = syntactic_complexity(Word::from_compact("ab"), kAB);
        CHECK(ab.literal_subtrahend == 2);
        CHECK(ab.literal_formula == 3);
        CHECK(ab.literal_formula != ab.oracle);
        SyntacticResult aba = syntactic_complexity(Word::from_compact("aba"), kAB);
        CHECK(aba.literal_subtrahend == 2);
        CHECK(aba.literal_formula == 6);
        CHECK(aba.literal_formula != aba.oracle);
    }
    SUBCASE("adjusted formula matches for all binary w, |w| <= 5") {
        int count = 0;
        for (const Word& w : binary_words(1, 5)) {
            SyntacticResult r = syntactic_complexity(w, kAB);
            CHECK(r.match());
            ++count;
        }
        CHECK(count == 62);
    }
}

TEST_CASE("Prop 3 proof structure on the semigroup") {
    for (const char* text : {"ab", "aba", "abba", "aabab"}) {
        Word w = Word::from_compact(text);
        Acceptor aw = build_aw(w, kAB);
        const Semiautomaton& base = aw.base();
        auto semigroup = transition_semigroup(aw);

        // the n+1 constants are pairwise distinct and all realized
        std::set<std::vector<State>> constant_images;
        for (const Transformation& t : semigroup)
            if (t.is_constant()) constant_images.insert(t.images);
        CHECK(constant_images.size() == w.size() + 1);

        // members of fact ∪ suff ∪ (pref \ pref_syn) realize pairwise
        // distinct non-constant transformations
        WordClasses c = word_classes(w, kAB);
        std::vector<Word> members(c.fact.begin(), c.fact.end());
        members.insert(members.end(), c.suff.begin(), c.suff.end());
        for (const Word& p : c.pref)
            if (!c.pref_syn_adjusted.count(p)) members.push_back(p);
        std::set<std::vector<State>> images;
        for (const Word& u : members) {
            std::vector<State> img;
            for (State q = 0; q < base.num_states(); ++q) img.push_back(base.run(q, u));
            bool constant =
                std::all_of(img.begin(), img.end(), [&img](State s) { return s == img[0]; });
            CHECK(!constant);
            images.insert(std::move(img));
        }
        CHECK(images.size() == members.size());
    }
}
