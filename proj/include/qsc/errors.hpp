#ifndef QSC_ERRORS_HPP
#define QSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsc {

enum class Errc {
    NotIrreducible,
    NotPrimitive,
    DegreeMismatch,
    ZeroInverse,
    FieldMismatch,
    ZeroArgument,
    NotADivisor,
    TooLarge,
    CapExceeded,
    ZeroScalar,
    BadArguments,
    TooFewWords,
    TrinomialReducible,
    DivisibilityViolated,
    NotPrime,
    ConditionFailed,
    GcdViolated,
    EqualSubspaces,
    ZeroCoefficient,
    NoInteriorCoefficient,
    ParseError,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace qsc

#endif
