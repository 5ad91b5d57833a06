#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specht {

enum class ErrorKind {
    InvalidPrime,
    InvalidPartition,
    SizeMismatch,
    Overflow,
    BoundExceeded,
    NonUniqueMaximum,
    IndexOutOfRange,
    OddMultiple,
    NotDominant,
    RankBound,
    PreconditionFailed,
    FalsifiedLemma,
    NotTwoPart,
    DegreeMismatch,
    RelationCheckFailed,
    UnknownSuite,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what the
/// CLI maps onto exit codes; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace specht
