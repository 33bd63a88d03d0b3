#ifndef SYNKIT_ERRORS_HPP
#define SYNKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synkit {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed `.aut` input or an unparsable word/alphabet. Carries a 1-based
/// line number when the source is a text stream (0 = not applicable).
struct ParseError : Error {
    int line;
    ParseError(const std::string& what, int line_number = 0)
        : Error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + what : what),
          line(line_number) {}
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// Two operands carry different alphabets.
struct AlphabetMismatch : PreconditionError {
    AlphabetMismatch() : PreconditionError("alphabet mismatch") {}
};

/// A configured cap (subset count, semigroup size, enumeration budget)
/// was exceeded; the operation refuses instead of running away.
struct BudgetError : Error {
    using Error::Error;
};

/// A search whose success is guaranteed by a theorem came up empty. The
/// message embeds the full instance so the case can be reproduced.
struct TheoremViolation : Error {
    using Error::Error;
};

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultSemigroupCap = 1000000;
inline constexpr std::size_t kDefaultEnumBudget = std::size_t{1} << 20;

}  // namespace synkit

#endif  // SYNKIT_ERRORS_HPP
