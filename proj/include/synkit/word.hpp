#ifndef SYNKIT_WORD_HPP
#define SYNKIT_WORD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synkit/errors.hpp"

namespace synkit {

/// Alphabet symbols are plain tokens: non-empty, no whitespace, ':' or '#'.
using Symbol = std::string;

bool valid_symbol(std::string_view token);

/// A finite word over some alphabet. Symbols are stored as tokens; the
/// class itself is alphabet-agnostic, operations that need letter indices
/// resolve them through an Alphabet.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols);

    /// One symbol per character, e.g. "aba".
    static Word from_compact(std::string_view text);
    /// Whitespace-separated symbols, e.g. "a b a".
    static Word from_tokens(std::string_view text);

    std::size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }
    const Symbol& operator[](std::size_t i) const { return syms_[i]; }

    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    /// Factor starting at 0-based position `pos`, `len` symbols long.
    Word subword(std::size_t pos, std::size_t len) const;

    Word operator+(const Word& other) const;
    Word& operator+=(const Symbol& s);
    Word& operator+=(const Word& other);
    Word pow(int k) const;

    bool is_prefix_of(const Word& w) const;
    bool is_suffix_of(const Word& w) const;
    bool is_factor_of(const Word& w) const;

    /// Compact rendering when every symbol is a single character,
    /// space-separated otherwise. The empty word renders as "".
    std::string str() const;

    auto begin() const { return syms_.begin(); }
    auto end() const { return syms_.end(); }

    bool operator==(const Word&) const = default;
    bool operator<(const Word& other) const { return syms_ < other.syms_; }

private:
    std::vector<Symbol> syms_;
};

/// Ordered set of distinct symbols. The declared order is semantically
/// relevant: lexicographic tie-breaking everywhere follows it.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> tokens);
    /// Comma-separated tokens, e.g. "a,b".
    static Alphabet from_csv(std::string_view text);

    std::size_t size() const { return tokens_.size(); }
    const Symbol& symbol(int i) const { return tokens_[static_cast<std::size_t>(i)]; }
    const std::vector<Symbol>& tokens() const { return tokens_; }

    int index_of(const Symbol& s) const;  // throws ParseError on unknown symbol
    std::optional<int> try_index(const Symbol& s) const;
    bool contains_word(const Word& w) const;

    /// Parses a word against this alphabet: compact single-character form by
    /// default, whitespace-separated tokens when `tokens` is set.
    Word parse_word(std::string_view text, bool tokens = false) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<Symbol> tokens_;
    std::unordered_map<Symbol, int> index_;
};

}  // namespace synkit

#endif  // SYNKIT_WORD_HPP
