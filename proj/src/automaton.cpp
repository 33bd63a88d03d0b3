#include "synkit/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace synkit {

Semiautomaton::Semiautomaton(int n_states, Alphabet alphabet, std::vector<State> delta)
    : n_(n_states), k_(alphabet.size()), alphabet_(std::move(alphabet)), delta_(std::move(delta)) {
    if (n_ < 1) throw ParseError("automaton needs at least one state");
    if (delta_.size() != static_cast<std::size_t>(n_) * k_)
        throw ParseError("transition table has wrong size");
    for (State q : delta_) {
        if (q < 0 || q >= n_) throw ParseError("transition target out of range");
    }
}

State Semiautomaton::run(State q, const Word& u) const {
    for (const Symbol& s : u) q = step(q, alphabet_.index_of(s));
    return q;
}

StateSet Semiautomaton::image_letter(const StateSet& states, int letter) const {
    StateSet out;
    out.reserve(states.size());
    for (State q : states) out.push_back(step(q, letter));
    return make_state_set(std::move(out));
}

StateSet Semiautomaton::image(const StateSet& states, const Word& u) const {
    StateSet cur = states;
    for (const Symbol& s : u) cur = image_letter(cur, alphabet_.index_of(s));
    return cur;
}

StateSet Semiautomaton::all_states() const {
    StateSet out(static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(q)] = q;
    return out;
}

bool Semiautomaton::is_strongly_connected() const {
    // forward reach from 0 and reach-in-reverse-graph from 0
    auto reach = [this](bool reverse) {
        std::vector<std::vector<State>> radj;
        if (reverse) {
            radj.assign(static_cast<std::size_t>(n_), {});
            for (State q = 0; q < n_; ++q)
                for (int a = 0; a < static_cast<int>(k_); ++a)
                    radj[static_cast<std::size_t>(step(q, a))].push_back(q);
        }
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        std::vector<State> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            auto visit = [&](State t) {
                if (!seen[static_cast<std::size_t>(t)]) {
                    seen[static_cast<std::size_t>(t)] = true;
                    ++count;
                    stack.push_back(t);
                }
            };
            if (reverse) {
                for (State t : radj[static_cast<std::size_t>(q)]) visit(t);
            } else {
                for (int a = 0; a < static_cast<int>(k_); ++a) visit(step(q, a));
            }
        }
        return count;
    };
    return reach(false) == n_ && reach(true) == n_;
}

Acceptor::Acceptor(Semiautomaton base, State initial, const StateSet& finals)
    : base_(std::move(base)), initial_(initial), final_(static_cast<std::size_t>(base_.num_states()), false) {
    if (initial_ < 0 || initial_ >= base_.num_states())
        throw ParseError("initial state out of range");
    for (State q : finals) {
        if (q < 0 || q >= base_.num_states()) throw ParseError("final state out of range");
        final_[static_cast<std::size_t>(q)] = true;
    }
}

StateSet Acceptor::finals() const {
    StateSet out;
    for (State q = 0; q < num_states(); ++q)
        if (final_[static_cast<std::size_t>(q)]) out.push_back(q);
    return out;
}

Acceptor ParsedAutomaton::acceptor() const {
    if (!initial) throw PreconditionError("input has no initial state");
    return Acceptor(machine, *initial, finals);
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        std::size_t first = text.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (text[first] == '#') continue;
        out.push_back({number, text});
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok + "'", line);
    }
    if (pos != tok.size()) throw ParseError("expected a number, got '" + tok + "'", line);
    return value;
}

}  // namespace

ParsedAutomaton parse_aut(std::istream& in) {
    auto lines = significant_lines(in);
    std::optional<Alphabet> alphabet;
    std::optional<int> n_states;
    std::optional<State> initial;
    std::optional<StateSet> finals;
    std::size_t pos = 0;

    for (; pos < lines.size(); ++pos) {
        const auto& [num, text] = lines[pos];
        auto fields = split_fields(text);
        const std::string& head = fields[0];
        if (head == "table:") {
            if (fields.size() != 1) throw ParseError("unexpected tokens after 'table:'", num);
            ++pos;
            break;
        }
        if (head == "alphabet:") {
            if (alphabet) throw ParseError("duplicate 'alphabet:' line", num);
            std::vector<Symbol> toks(fields.begin() + 1, fields.end());
            if (toks.empty()) throw ParseError("empty alphabet", num);
            try {
                alphabet = Alphabet(std::move(toks));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), num);
            }
        } else if (head == "states:") {
            if (n_states) throw ParseError("duplicate 'states:' line", num);
            if (fields.size() != 2) throw ParseError("'states:' expects one number", num);
            n_states = parse_int(fields[1], num);
            if (*n_states < 1) throw ParseError("state count must be at least 1", num);
        } else if (head == "initial:") {
            if (initial) throw ParseError("duplicate 'initial:' line", num);
            if (fields.size() != 2) throw ParseError("'initial:' expects one state id", num);
            initial = parse_int(fields[1], num);
        } else if (head == "finals:") {
            if (finals) throw ParseError("duplicate 'finals:' line", num);
            StateSet f;
            for (std::size_t i = 1; i < fields.size(); ++i) f.push_back(parse_int(fields[i], num));
            finals = make_state_set(std::move(f));
        } else {
            throw ParseError("malformed header '" + head + "'", num);
        }
    }

    int last_header_line = pos > 0 ? lines[pos - 1].number : 0;
    if (!alphabet) throw ParseError("missing 'alphabet:' line", last_header_line);
    if (!n_states) throw ParseError("missing 'states:' line", last_header_line);
    if (finals && !initial) throw ParseError("'finals:' given without 'initial:'", last_header_line);

    int n = *n_states;
    int k = static_cast<int>(alphabet->size());
    std::vector<State> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);

    for (; pos < lines.size(); ++pos) {
        const auto& [num, text] = lines[pos];
        auto fields = split_fields(text);
        std::string head = fields[0];
        if (head.empty() || head.back() != ':')
            throw ParseError("malformed table row '" + text + "'", num);
        head.pop_back();
        State q = parse_int(head, num);
        if (q < 0 || q >= n) throw ParseError("row state " + std::to_string(q) + " out of range", num);
        if (seen[static_cast<std::size_t>(q)])
            throw ParseError("duplicate row for state " + std::to_string(q), num);
        seen[static_cast<std::size_t>(q)] = true;
        if (static_cast<int>(fields.size()) - 1 != k)
            throw ParseError("row for state " + std::to_string(q) + " needs " + std::to_string(k) +
                                 " images, got " + std::to_string(fields.size() - 1),
                             num);
        for (int a = 0; a < k; ++a) {
            State img = parse_int(fields[static_cast<std::size_t>(a) + 1], num);
            if (img < 0 || img >= n)
                throw ParseError("transition target " + std::to_string(img) + " out of range", num);
            delta[static_cast<std::size_t>(q) * static_cast<std::size_t>(k) + static_cast<std::size_t>(a)] = img;
        }
    }

    for (State q = 0; q < n; ++q) {
        if (!seen[static_cast<std::size_t>(q)])
            throw ParseError("incomplete transition table: no row for state " + std::to_string(q));
    }

    if (initial && (*initial < 0 || *initial >= n)) throw ParseError("initial state out of range");
    if (finals) {
        for (State q : *finals)
            if (q < 0 || q >= n) throw ParseError("final state out of range");
    }

    ParsedAutomaton out{Semiautomaton(n, *alphabet, std::move(delta)), initial,
                        finals.value_or(StateSet{})};
    return out;
}

ParsedAutomaton parse_aut_text(const std::string& text) {
    std::istringstream in(text);
    return parse_aut(in);
}

ParsedAutomaton parse_aut_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_aut(in);
}

namespace {

void write_common(std::ostream& out, const Semiautomaton& a) {
    out << "alphabet:";
    for (const auto& t : a.alphabet().tokens()) out << ' ' << t;
    out << "\nstates: " << a.num_states() << '\n';
}

void write_table(std::ostream& out, const Semiautomaton& a) {
    out << "table:\n";
    for (State q = 0; q < a.num_states(); ++q) {
        out << q << ':';
        for (int l = 0; l < a.num_letters(); ++l) out << ' ' << a.step(q, l);
        out << '\n';
    }
}

}  // namespace

std::string to_aut(const Semiautomaton& a) {
    std::ostringstream out;
    write_common(out, a);
    write_table(out, a);
    return out.str();
}

std::string to_aut(const Acceptor& a) {
    std::ostringstream out;
    write_common(out, a.base());
    out << "initial: " << a.initial() << '\n';
    StateSet f = a.finals();
    if (!f.empty()) {
        out << "finals:";
        for (State q : f) out << ' ' << q;
        out << '\n';
    }
    write_table(out, a.base());
    return out.str();
}

namespace {

std::string dot_body(const Semiautomaton& a, const StateSet& finals, std::optional<State> initial) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    if (initial) {
        out << "  __start [shape=none, label=\"\"];\n";
    }
    for (State q = 0; q < a.num_states(); ++q) {
        bool dbl = set_contains(finals, q);
        out << "  q" << q << " [shape=" << (dbl ? "doublecircle" : "circle") << ", label=\"" << q
            << "\"];\n";
    }
    if (initial) out << "  __start -> q" << *initial << ";\n";
    for (State q = 0; q < a.num_states(); ++q) {
        for (int l = 0; l < a.num_letters(); ++l) {
            out << "  q" << q << " -> q" << a.step(q, l) << " [label=\""
                << a.alphabet().symbol(l) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const Semiautomaton& a) { return dot_body(a, {}, std::nullopt); }

std::string to_dot(const Acceptor& a) { return dot_body(a.base(), a.finals(), a.initial()); }

StateSet make_state_set(std::vector<State> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

bool set_contains(const StateSet& set, State q) {
    return std::binary_search(set.begin(), set.end(), q);
}

StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

StateSet set_intersection(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace synkit
