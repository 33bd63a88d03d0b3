#include "synkit/cli.hpp"

#include <chrono>
#include <functional>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "synkit/aw.hpp"
#include "synkit/constants.hpp"
#include "synkit/corpus.hpp"
#include "synkit/decomp.hpp"
#include "synkit/errors.hpp"
#include "synkit/minimize.hpp"
#include "synkit/partition.hpp"
#include "synkit/power.hpp"
#include "synkit/synchro.hpp"
#include "synkit/syntactic.hpp"

namespace synkit {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    std::size_t subset_cap = kDefaultSubsetCap;
    std::size_t semigroup_cap = kDefaultSemigroupCap;
    std::size_t enum_budget = kDefaultEnumBudget;
    std::uint64_t seed = 1;
    bool tokens = false;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    std::int64_t elapsed_ms() const {
        if (!timing) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json checks_json(const std::vector<CheckItem>& checks) {
    json out = json::object();
    for (const CheckItem& c : checks) out[c.name] = c.pass;
    return out;
}

void emit_json(std::ostream& out, const json& payload) { out << payload.dump(2) << '\n'; }

// Emits an automaton respecting --format.
void emit_automaton(std::ostream& out, const Options& opt,
                    const std::variant<Semiautomaton, Acceptor>& value) {
    auto aut_text = [&]() {
        return std::visit([](const auto& a) { return to_aut(a); }, value);
    };
    if (opt.format == "aut") {
        out << aut_text();
    } else if (opt.format == "dot") {
        out << std::visit([](const auto& a) { return to_dot(a); }, value);
    } else {
        json payload;
        payload["kind"] = std::holds_alternative<Acceptor>(value) ? "acceptor" : "semiautomaton";
        payload["aut"] = aut_text();
        emit_json(out, payload);
    }
}

Semiautomaton load_semiautomaton(const std::string& path) {
    ParsedAutomaton p = parse_aut_file(path);
    return p.machine;
}

Acceptor load_acceptor(const std::string& path) {
    ParsedAutomaton p = parse_aut_file(path);
    if (!p.is_acceptor())
        throw PreconditionError("'" + path + "' is a semiautomaton; an acceptor is required");
    return p.acceptor();
}

json word_json(const std::optional<Word>& w) {
    if (!w) return nullptr;
    return w->str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"synkit: synchronizing automata and ideal regular languages"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"aut", "dot", "json"}));
    app.add_option("--subset-cap", opt.subset_cap, "max subset configurations");
    app.add_option("--semigroup-cap", opt.semigroup_cap, "max semigroup elements");
    app.add_option("--enum-budget", opt.enum_budget, "max enumerated transition tables");
    app.add_option("--seed", opt.seed, "seed for randomized corpora");
    app.add_flag("--tokens", opt.tokens, "parse words as whitespace-separated tokens");
    app.add_flag("--timing", opt.timing, "fill elapsed_ms in reports");

    std::function<void()> action;

    // parse
    {
        auto* cmd = app.add_subcommand("parse", "parse and re-emit a .aut file");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file, "input .aut file")->required();
        cmd->callback([&, file] {
            action = [&, file] {
                ParsedAutomaton p = parse_aut_file(*file);
                if (p.is_acceptor())
                    emit_automaton(out, opt, p.acceptor());
                else
                    emit_automaton(out, opt, p.machine);
            };
        });
    }

    // syn check | shortest | language
    {
        auto* syn = app.add_subcommand("syn", "synchronization analysis");
        syn->require_subcommand(1);
        auto file = std::make_shared<std::string>();
        auto make_report = [&, file](bool with_language) {
            Semiautomaton a = load_semiautomaton(*file);
            SynReport r = shortest_reset(a, opt.subset_cap);
            json payload;
            payload["synchronizing"] = r.synchronizing;
            payload["threshold"] = r.threshold ? json(*r.threshold) : json(nullptr);
            payload["shortest"] = word_json(r.shortest);
            if (with_language) payload["syn_states"] = syn_language(a, opt.subset_cap).acceptor().num_states();
            payload["elapsed_ms"] = opt.elapsed_ms();
            emit_json(out, payload);
        };
        auto* check = syn->add_subcommand("check", "is the automaton synchronizing?");
        check->add_option("file", *file)->required();
        check->callback([&, make_report] { action = [make_report] { make_report(false); }; });
        auto* shortest = syn->add_subcommand("shortest", "shortest reset word");
        shortest->add_option("file", *file)->required();
        shortest->callback([&, make_report] { action = [make_report] { make_report(false); }; });
        auto* language = syn->add_subcommand("language", "minimal acceptor of Syn(A)");
        language->add_option("file", *file)->required();
        language->callback([&, file] {
            action = [&, file] {
                Semiautomaton a = load_semiautomaton(*file);
                emit_automaton(out, opt, syn_language(a, opt.subset_cap).acceptor());
            };
        });
    }

    // aw build | verify
    {
        auto* aw = app.add_subcommand("aw", "the A_w construction");
        aw->require_subcommand(1);
        auto word_text = std::make_shared<std::string>();
        auto alphabet_csv = std::make_shared<std::string>("a,b");
        auto* build = aw->add_subcommand("build", "emit A_w");
        build->add_option("word", *word_text)->required();
        build->add_option("--alphabet", *alphabet_csv, "comma-separated alphabet");
        build->callback([&, word_text, alphabet_csv] {
            action = [&, word_text, alphabet_csv] {
                Alphabet alphabet = Alphabet::from_csv(*alphabet_csv);
                Word w = alphabet.parse_word(*word_text, opt.tokens);
                emit_automaton(out, opt, build_aw(w, alphabet));
            };
        });
        auto* verify = aw->add_subcommand("verify", "check the A_w properties");
        verify->add_option("word", *word_text)->required();
        verify->add_option("--alphabet", *alphabet_csv, "comma-separated alphabet");
        verify->callback([&, word_text, alphabet_csv] {
            action = [&, word_text, alphabet_csv] {
                Alphabet alphabet = Alphabet::from_csv(*alphabet_csv);
                Word w = alphabet.parse_word(*word_text, opt.tokens);
                AwReport r = verify_aw(w, alphabet);
                json payload;
                payload["word"] = w.str();
                payload["checks"] = checks_json(r.checks);
                payload["all_pass"] = r.passed();
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
    }

    // syntactic
    {
        auto* cmd = app.add_subcommand("syntactic", "syntactic complexity of w^-1 Sigma* w");
        auto word_text = std::make_shared<std::string>();
        auto alphabet_csv = std::make_shared<std::string>("a,b");
        cmd->add_option("word", *word_text)->required();
        cmd->add_option("--alphabet", *alphabet_csv, "comma-separated alphabet");
        cmd->callback([&, word_text, alphabet_csv] {
            action = [&, word_text, alphabet_csv] {
                Alphabet alphabet = Alphabet::from_csv(*alphabet_csv);
                Word w = alphabet.parse_word(*word_text, opt.tokens);
                SyntacticResult r = syntactic_complexity(w, alphabet, opt.semigroup_cap);
                json payload;
                payload["formula"] = r.formula;
                payload["oracle"] = r.oracle;
                payload["pref"] = r.classes.pref.size();
                payload["fact"] = r.classes.fact.size();
                payload["suff"] = r.classes.suff.size();
                payload["subtrahend"] = r.classes.pref_syn_adjusted.size();
                payload["literal_subtrahend"] = r.literal_subtrahend;
                payload["match"] = r.match();
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
    }

    // constants check | witness
    {
        auto* constants = app.add_subcommand("constants", "Schuetzenberger constants");
        constants->require_subcommand(1);
        auto file = std::make_shared<std::string>();
        auto run_constants = [&, file](bool with_witness) {
            Acceptor a = load_acceptor(*file);
            Acceptor min = minimize(a);
            json payload;
            bool has = has_constant(min);
            payload["has_constant"] = has;
            payload["witness"] =
                with_witness && has ? word_json(find_constant(min)) : json(nullptr);
            auto sink = find_sink(min);
            payload["sink"] = sink ? json(*sink) : json(nullptr);
            PropCheck p5 = prop5_check(min, opt.subset_cap);
            PropCheck p6 = prop6_check(min, opt.subset_cap);
            payload["prop5"] = {{"criterion", p5.criterion}, {"direct", p5.direct}};
            payload["prop6"] = {{"criterion", p6.criterion}, {"direct", p6.direct}};
            payload["z_nonempty"] = z_nonempty(min, opt.subset_cap);
            payload["elapsed_ms"] = opt.elapsed_ms();
            emit_json(out, payload);
        };
        auto* check = constants->add_subcommand("check", "decide CONSTANT");
        check->add_option("file", *file)->required();
        check->callback([&, run_constants] { action = [run_constants] { run_constants(false); }; });
        auto* witness = constants->add_subcommand("witness", "decide CONSTANT and emit a witness");
        witness->add_option("file", *file)->required();
        witness->callback([&, run_constants] { action = [run_constants] { run_constants(true); }; });
    }

    // ideal kind | rc-search
    {
        auto* ideal = app.add_subcommand("ideal", "ideal-language analysis");
        ideal->require_subcommand(1);
        auto* kind = ideal->add_subcommand("kind", "left/right/two-sided ideal flags");
        auto file = std::make_shared<std::string>();
        kind->add_option("file", *file)->required();
        kind->callback([&, file] {
            action = [&, file] {
                Acceptor a = load_acceptor(*file);
                IdealKind k = ideal_kind(Language::of(a));
                json payload;
                payload["left"] = k.left;
                payload["right"] = k.right;
                payload["two_sided"] = k.two_sided;
                emit_json(out, payload);
            };
        });
        auto* rc = ideal->add_subcommand("rc-search", "exhaustive reset-complexity search");
        auto word_text = std::make_shared<std::string>();
        auto alphabet_csv = std::make_shared<std::string>("a,b");
        auto max_states = std::make_shared<int>(3);
        rc->add_option("word", *word_text)->required();
        rc->add_option("--alphabet", *alphabet_csv, "comma-separated alphabet");
        rc->add_option("--max-states", *max_states, "largest state count to enumerate");
        rc->callback([&, word_text, alphabet_csv, max_states] {
            action = [&, word_text, alphabet_csv, max_states] {
                Alphabet alphabet = Alphabet::from_csv(*alphabet_csv);
                Word w = alphabet.parse_word(*word_text, opt.tokens);
                RcSearchReport r = rc_search(w, alphabet, *max_states, opt.enum_budget, opt.subset_cap);
                json payload;
                payload["query"] = "rc-search";
                payload["parameters"] = {{"word", w.str()},
                                         {"alphabet", *alphabet_csv},
                                         {"max_states", *max_states}};
                json counts = json::array();
                for (const RcSearchCount& c : r.counts)
                    counts.push_back({{"states", c.states},
                                      {"tables", c.tables},
                                      {"synchronizing", c.synchronizing},
                                      {"witnesses", c.witnesses}});
                payload["counts"] = counts;
                payload["witnesses"] = r.witness_aut;
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
    }

    // decomp extract | verify | roundtrip
    {
        auto* decomp = app.add_subcommand("decomp", "reset left regular decompositions");
        decomp->require_subcommand(1);
        auto file = std::make_shared<std::string>();
        auto files = std::make_shared<std::vector<std::string>>();
        auto* extract = decomp->add_subcommand("extract", "decomposition of a strongly connected synchronizing automaton");
        extract->add_option("file", *file)->required();
        extract->callback([&, file] {
            action = [&, file] {
                Semiautomaton a = load_semiautomaton(*file);
                Decomposition d = extract_decomposition(a, opt.subset_cap);
                json parts = json::array();
                for (std::size_t i = 0; i < d.parts.size(); ++i)
                    parts.push_back({{"state", i}, {"aut", to_aut(d.parts[i].acceptor())}});
                json payload;
                payload["parts"] = parts;
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
        auto* verify = decomp->add_subcommand("verify", "Definition-1 conditions on acceptor files");
        verify->add_option("files", *files, "one acceptor file per part")->required()->expected(-1);
        verify->callback([&, files] {
            action = [&, files] {
                Decomposition d;
                for (std::size_t i = 0; i < files->size(); ++i) {
                    Acceptor a = load_acceptor((*files)[i]);
                    if (i == 0) d.alphabet = a.alphabet();
                    d.parts.push_back(Language::of(a));
                }
                DecompReport r = verify_decomposition(d, opt.subset_cap);
                json payload;
                payload["checks"] = checks_json(r.checks);
                payload["ok"] = r.passed();
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
        auto* roundtrip = decomp->add_subcommand("roundtrip", "extract, rebuild, compare");
        roundtrip->add_option("file", *file)->required();
        roundtrip->callback([&, file] {
            action = [&, file] {
                Semiautomaton a = load_semiautomaton(*file);
                Decomposition d = extract_decomposition(a, opt.subset_cap);
                DecompReport verify_report = verify_decomposition(d, opt.subset_cap);
                Semiautomaton rebuilt = automaton_of_decomposition(d);
                json payload;
                payload["parts"] = d.parts.size();
                payload["verify"] = checks_json(verify_report.checks);
                payload["isomorphic"] = is_isomorphic(rebuilt, a);
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
    }

    // lift
    {
        auto* cmd = app.add_subcommand("lift", "Theorem-6 lifting construction");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([&, file] {
            action = [&, file] {
                Semiautomaton a = load_semiautomaton(*file);
                LiftResult r = lift(a, opt.subset_cap);
                LiftReport report = verify_lift(a, r, opt.subset_cap);
                json payload;
                payload["w"] = r.w.str();
                payload["b_aut"] = to_aut(r.b);
                payload["phi"] = r.phi.images;
                json labels = json::array();
                for (const auto& [state, prefix] : r.class_labels)
                    labels.push_back({state, prefix});
                payload["class_labels"] = labels;
                payload["verify"] = checks_json(report.checks);
                payload["all_pass"] = report.passed();
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
    }

    // probe cerny
    {
        auto* probe = app.add_subcommand("probe", "conjecture probes");
        probe->require_subcommand(1);
        auto* cerny = probe->add_subcommand("cerny", "Theorem 1 / Theorem 7 probes over a corpus");
        auto files = std::make_shared<std::vector<std::string>>();
        auto random_count = std::make_shared<int>(10);
        auto min_states = std::make_shared<int>(2);
        auto max_states = std::make_shared<int>(4);
        cerny->add_option("files", *files, "corpus .aut files (default: C_3, C_4 + random)");
        cerny->add_option("--random-count", *random_count, "random instances when no files given");
        cerny->add_option("--min-states", *min_states);
        cerny->add_option("--max-states", *max_states);
        cerny->callback([&, files, random_count, min_states, max_states] {
            action = [&, files, random_count, min_states, max_states] {
                std::vector<Semiautomaton> corpus;
                if (!files->empty()) {
                    for (const std::string& f : *files) corpus.push_back(load_semiautomaton(f));
                } else {
                    corpus.push_back(cerny_automaton(3));
                    corpus.push_back(cerny_automaton(4));
                    Alphabet ab({"a", "b"});
                    for (Semiautomaton& a : scs_corpus(*random_count, *min_states, *max_states, ab, opt.seed))
                        corpus.push_back(std::move(a));
                }
                CernyProbeReport r = cerny_probes(corpus, opt.subset_cap);
                json rows = json::array();
                for (const CernyProbeRow& row : r.rows)
                    rows.push_back({{"index", row.index},
                                    {"states", row.states},
                                    {"syn_norm", row.syn_norm},
                                    {"b_states", row.b_states},
                                    {"b_norm", row.b_norm},
                                    {"congruences_checked", row.congruences_checked},
                                    {"congruences_skipped", row.congruences_skipped},
                                    {"thm1_equality", row.thm1_equality}});
                json payload;
                payload["query"] = "probe-cerny";
                payload["parameters"] = {{"corpus_size", corpus.size()}, {"seed", opt.seed}};
                payload["rows"] = rows;
                payload["violations"] = r.violations;
                payload["zero_violations"] = r.zero_violations();
                payload["elapsed_ms"] = opt.elapsed_ms();
                emit_json(out, payload);
            };
        });
    }

    // fixtures cerny <n>
    {
        auto* fixtures = app.add_subcommand("fixtures", "well-known automata");
        fixtures->require_subcommand(1);
        auto* cerny = fixtures->add_subcommand("cerny", "the Cerny automaton C_n");
        auto n = std::make_shared<int>(4);
        cerny->add_option("n", *n, "number of states")->required();
        cerny->callback([&, n] {
            action = [&, n] { emit_automaton(out, opt, cerny_automaton(*n)); };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exhausted: " << e.what() << '\n';
        return 4;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return 3;
    } catch (const TheoremViolation& e) {
        err << "THEOREM VIOLATION (please report): " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace synkit
