#include "synkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace synkit {

bool valid_symbol(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#') return false;
    }
    return true;
}

Word::Word(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {
    for (const auto& s : syms_) {
        if (!valid_symbol(s)) throw ParseError("invalid symbol '" + s + "' in word");
    }
}

Word Word::from_compact(std::string_view text) {
    std::vector<Symbol> syms;
    syms.reserve(text.size());
    for (char c : text) syms.emplace_back(1, c);
    return Word(std::move(syms));
}

Word Word::from_tokens(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Symbol> syms;
    Symbol tok;
    while (in >> tok) syms.push_back(tok);
    return Word(std::move(syms));
}

Word Word::prefix(std::size_t len) const {
    Word out;
    out.syms_.assign(syms_.begin(), syms_.begin() + static_cast<std::ptrdiff_t>(len));
    return out;
}

Word Word::suffix(std::size_t len) const {
    Word out;
    out.syms_.assign(syms_.end() - static_cast<std::ptrdiff_t>(len), syms_.end());
    return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    Word out;
    auto first = syms_.begin() + static_cast<std::ptrdiff_t>(pos);
    out.syms_.assign(first, first + static_cast<std::ptrdiff_t>(len));
    return out;
}

Word Word::operator+(const Word& other) const {
    Word out = *this;
    out += other;
    return out;
}

Word& Word::operator+=(const Symbol& s) {
    syms_.push_back(s);
    return *this;
}

Word& Word::operator+=(const Word& other) {
    syms_.insert(syms_.end(), other.syms_.begin(), other.syms_.end());
    return *this;
}

Word Word::pow(int k) const {
    Word out;
    for (int i = 0; i < k; ++i) out += *this;
    return out;
}

bool Word::is_prefix_of(const Word& w) const {
    return size() <= w.size() && std::equal(syms_.begin(), syms_.end(), w.syms_.begin());
}

bool Word::is_suffix_of(const Word& w) const {
    return size() <= w.size() &&
           std::equal(syms_.rbegin(), syms_.rend(), w.syms_.rbegin());
}

bool Word::is_factor_of(const Word& w) const {
    if (size() > w.size()) return false;
    for (std::size_t pos = 0; pos + size() <= w.size(); ++pos) {
        if (std::equal(syms_.begin(), syms_.end(), w.syms_.begin() + static_cast<std::ptrdiff_t>(pos)))
            return true;
    }
    return false;
}

std::string Word::str() const {
    bool compact = std::all_of(syms_.begin(), syms_.end(),
                               [](const Symbol& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < syms_.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += syms_[i];
    }
    return out;
}

Alphabet::Alphabet(std::vector<Symbol> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw ParseError("alphabet must have at least one symbol");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (!valid_symbol(tokens_[i])) throw ParseError("invalid alphabet symbol '" + tokens_[i] + "'");
        if (!index_.emplace(tokens_[i], static_cast<int>(i)).second)
            throw ParseError("duplicate alphabet symbol '" + tokens_[i] + "'");
    }
}

Alphabet Alphabet::from_csv(std::string_view text) {
    std::vector<Symbol> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        tokens.emplace_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return Alphabet(std::move(tokens));
}

int Alphabet::index_of(const Symbol& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw ParseError("unknown symbol '" + s + "'");
    return it->second;
}

std::optional<int> Alphabet::try_index(const Symbol& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Alphabet::contains_word(const Word& w) const {
    for (const auto& s : w) {
        if (!try_index(s)) return false;
    }
    return true;
}

Word Alphabet::parse_word(std::string_view text, bool tokens) const {
    Word w = tokens ? Word::from_tokens(text) : Word::from_compact(text);
    for (const auto& s : w) index_of(s);  // throws on unknown symbol
    return w;
}

}  // namespace synkit
