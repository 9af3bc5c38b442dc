#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace twoended {

// Exact scalar type for EXACT mode. FLOAT mode uses plain binary64.
using Rational = mpq_class;
using BigInt = mpz_class;

enum class NumericMode { Exact, Float };

inline const char* to_string(NumericMode m) {
    return m == NumericMode::Exact ? "exact" : "float";
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid LayeredSpec or malformed input file.
struct SpecError : Error {
    using Error::Error;
};

// Truncation window too small for the requested radius.
struct TruncationError : Error {
    using Error::Error;
};

// Linear solve cannot proceed (disconnected carrier, p == q, bad pivot).
struct SolverError : Error {
    using Error::Error;
};

// Cycle-law residual above tolerance; message names the worst cycle edge.
struct CycleLawError : Error {
    using Error::Error;
};

// Operation precondition violated.
struct PreconditionError : Error {
    using Error::Error;
};

// Radius schedule exhausted before the probe ball settled; message carries
// the per-step difference trace.
struct ConvergenceError : Error {
    using Error::Error;
};

template <typename T>
struct NumTraits;

template <>
struct NumTraits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double abs(double v) { return v < 0 ? -v : v; }
    static double to_double(double v) { return v; }
    static std::string to_string(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static double from_tolerance(double tol) { return tol; }
    // Residual tolerances two orders above binary64 noise at target sizes.
    static double solver_tolerance() { return 1e-10; }
};

template <>
struct NumTraits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational abs(const Rational& v) { return ::abs(v); }
    static double to_double(const Rational& v) { return v.get_d(); }
    static std::string to_string(const Rational& v) { return v.get_str(); }
    static Rational from_tolerance(double tol) { return Rational(tol); }
    static Rational solver_tolerance() { return Rational(0); }
};

// Concrete overloads so gmpxx expression templates convert at the call site.
inline bool within_tolerance(const double& value, double tol) {
    return (value < 0 ? -value : value) <= tol;
}
inline bool within_tolerance(const Rational& value, double tol) {
    return ::abs(value) <= Rational(tol);
}

// Parses "p/q" or plain integer decimals as produced by NumTraits<Rational>.
Rational parse_rational(const std::string& text);

}  // namespace twoended
