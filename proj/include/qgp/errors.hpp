#ifndef QGP_ERRORS_HPP
#define QGP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgp {

enum class ErrorKind {
    NotUnit,
    SpecMismatch,
    ShapeMismatch,
    NotInjectiveInclusion,
    NotInjectiveModule,
    NotCofibrant,
    BlockMismatch,
    ParseError,
    ValidationError,
};

/// Recoverable input/usage errors. Maps to exit code 2 at the CLI.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// A certified postcondition failed: a theorem used as a runtime contract
/// did not hold, which signals an implementation bug, never bad input.
/// Maps to exit code 3 at the CLI.
class InternalInvariantBroken : public std::logic_error {
public:
    explicit InternalInvariantBroken(const std::string& what)
        : std::logic_error(what) {}
};

} // namespace qgp

#endif
