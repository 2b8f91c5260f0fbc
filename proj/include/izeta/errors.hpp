/*
 * errors.hpp
 * ----------
 * Exception hierarchy for the izeta library.
 *
 * Every library error derives from izeta::Error.  The three subfamilies
 * mirror the CLI exit-code contract:
 *   - InputError   (exit 2): malformed or out-of-domain input,
 *   - BudgetError  (exit 3): a configured work budget was exhausted,
 *   - MathCheckError is NOT thrown; failed mathematical verdicts are
 *     reported as values (exit 1 is decided by the caller).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace izeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input / domain errors (CLI exit code 2) ---------------------------

struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A class with mixed Hodge type where a polynomial in L = uv was required.
struct NotTate : InputError {
    explicit NotTate(const std::string& msg) : InputError(msg) {}
};

// Duality left a residual negative power of S = L^{-s}.
struct NotDualizable : InputError {
    explicit NotDualizable(const std::string& msg) : InputError(msg) {}
};

// Constant-term extraction applied outside the subring where the
// limit s -> -infinity exists.
struct NotInCTDomain : InputError {
    explicit NotInCTDomain(const std::string& msg) : InputError(msg) {}
};

struct ZeroPolynomial : InputError {
    explicit ZeroPolynomial(const std::string& msg) : InputError(msg) {}
};

struct NotACurvePoint : InputError {
    explicit NotACurvePoint(const std::string& msg) : InputError(msg) {}
};

// A stratum without torus structure was passed to the torus twist rule.
struct NotToric : InputError {
    explicit NotToric(const std::string& msg) : InputError(msg) {}
};

// Puncture exponents of a cyclic-cover stratum do not sum to 0 modulo
// the character order.
struct DegreeMismatch : InputError {
    explicit DegreeMismatch(const std::string& msg) : InputError(msg) {}
};

// A required character-twisted stratum class is not available.
struct MissingTwistedClass : InputError {
    explicit MissingTwistedClass(const std::string& msg) : InputError(msg) {}
};

// Exact division failed where the mathematics guarantees divisibility;
// indicates corrupted input data (or an implementation bug).
struct NotDivisible : InputError {
    explicit NotDivisible(const std::string& msg) : InputError(msg) {}
};

// Structured-text parse failure; carries line context in the message.
struct ParseError : InputError {
    explicit ParseError(const std::string& msg) : InputError(msg) {}
};

// A loaded resolution violates a structural invariant (positivity,
// additivity, trivial-twist consistency).
struct InvariantViolation : InputError {
    explicit InvariantViolation(const std::string& msg) : InputError(msg) {}
};

// Character order does not divide q - 1.
struct NotDividing : InputError {
    explicit NotDividing(const std::string& msg) : InputError(msg) {}
};

// --- budget errors (CLI exit code 3) ------------------------------------

struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Jet enumeration would exceed the configured candidate budget.
struct BudgetExceeded : BudgetError {
    explicit BudgetExceeded(const std::string& msg) : BudgetError(msg) {}
};

// Blowup count exceeded the configured cap.
struct ResolutionBudgetExceeded : BudgetError {
    explicit ResolutionBudgetExceeded(const std::string& msg) : BudgetError(msg) {}
};

} // namespace izeta
