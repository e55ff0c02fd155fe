// Directed-rounding interval arithmetic over double endpoints.
//
// Every operation returns an interval that contains the exact real result
// for all points of its inputs (containment soundness). Directed rounding
// is realized by error-free transformations plus nextafter-style endpoint
// nudging; the FPU rounding mode is never switched, so all operations are
// reentrant and thread-safe.
//
// Field operations (+, -, *, /) are tight: the returned endpoints are the
// correctly rounded-down/up values of the exact endpoint arithmetic.
// Transcendental operations (log, exp, pow) widen each endpoint by 4 ulp
// around the libm result.

#pragma once
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "primebounds/wide.hpp"

namespace primebounds {

// Three-valued outcome of a certified comparison. Holds only if the
// comparison is true for all points of the operand intervals; Fails only
// if false for all points; otherwise Undecided.
enum class Verdict { Holds, Fails, Undecided };

const char* to_string(Verdict v);
std::ostream& operator<<(std::ostream& os, Verdict v);

struct Interval {
    double lo;
    double hi;

    // [v, v]; v must be finite.
    static Interval exact(double v);
    // Validated [lo, hi]; requires lo <= hi, both finite.
    static Interval make(double lo, double hi);
    // 1-ulp widening on each side of v. Use for decimal literals such as
    // 0.1119 whose exact value is not representable in binary.
    static Interval around(double v);
    // Exact if |v| <= 2^53, otherwise 1-ulp outward of the converted value.
    static Interval from_i128(i128 v);
    static Interval from_u128(u128 v);

    double width() const { return hi - lo; }
    double mid() const { return lo + (hi - lo) / 2; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool contains(const Interval& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }
};

std::ostream& operator<<(std::ostream& os, const Interval& a);
std::string to_string(const Interval& a);

Interval iv_add(Interval a, Interval b);
Interval iv_sub(Interval a, Interval b);
Interval iv_mul(Interval a, Interval b);
// Requires 0 not in b; throws std::domain_error otherwise.
Interval iv_div(Interval a, Interval b);
Interval iv_neg(Interval a);
Interval iv_abs(Interval a);

// Requires a.lo > 0; throws std::domain_error otherwise.
Interval iv_log(Interval a);
Interval iv_exp(Interval a);
// General real exponent; requires a.lo > 0.
Interval iv_pow(Interval a, Interval b);
// Integer exponent with sign-correct semantics; base may straddle zero.
Interval iv_pow_int(Interval a, uint64_t k);

// Holds iff a.hi < b.lo; Fails iff a.lo >= b.hi; else Undecided.
Verdict certify_less(Interval a, Interval b);
// Holds iff a.hi <= b.lo; Fails iff a.lo > b.hi; else Undecided.
Verdict certify_le(Interval a, Interval b);

inline Interval operator+(Interval a, Interval b) { return iv_add(a, b); }
inline Interval operator-(Interval a, Interval b) { return iv_sub(a, b); }
inline Interval operator*(Interval a, Interval b) { return iv_mul(a, b); }
inline Interval operator/(Interval a, Interval b) { return iv_div(a, b); }
inline Interval operator-(Interval a) { return iv_neg(a); }

// Directed scalar helpers, shared with the prime-table theta accumulator
// and exposed for tests.
namespace rd {
double next_up(double x);
double next_down(double x);
double nudge_up(double x, int ulps);
double nudge_down(double x, int ulps);
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
} // namespace rd

} // namespace primebounds
