// Explicit analytic bound functions and constants used by the inequality
// catalog: the logarithmic integral Li, the constant
// c = 35995 - 3 Li(599^2) + 599^2/log 599, the Dusart pi(x) bounds, the
// Rosser p_n bounds, the cubic log-ratio from the lower-bound proof, the
// quadratic gap minorant with its n^2/14 crossover, and the theta band
// |theta(x) - x| < d x / log^4 x with d = 1717433.
//
// All functions are pure and return certified intervals.

#pragma once
#include <cstdint>
#include <optional>
#include <utility>

#include "primebounds/interval.hpp"

namespace primebounds::analytic {

// Euler-Mascheroni constant as a 1-ulp interval around a 30-digit literal.
Interval euler_gamma();

// Coefficient of the theta band; also governs the geometric upper form.
inline constexpr uint64_t kThetaBandD = 1717433;

// Logarithmic integral Li(x) for x > 1 (principal value), via the series
// gamma + log log x + sum_k (log x)^k / (k k!), truncated once terms drop
// below 1e-12 relative with the tail folded into the upper endpoint.
Interval li(Interval x);
Interval li(double x);

// Interval of width < 1e-2 containing c; contains -47.06746 to within 5e-3.
Interval constant_c();

// (x/log x)(1 + 1/log x); the bound claims validity for x >= 599.
Interval dusart_pi_lower(double x);
// (x/log x)(1 + 1.2762/log x); claims validity for x >= 2.
Interval dusart_pi_upper(double x);

// (n log n, n(log n + log log n)) for n >= 6.
std::pair<Interval, Interval> rosser_pn_bounds(uint64_t n);
// n log n, valid as a strict lower bound on p_n for every n >= 1.
Interval pn_floor(uint64_t n);

// log n + log log n + (log log n - 0.4)/log n, an upper bound on
// log p_{n+1} claimed for n >= 53; evaluable for n >= 2.
Interval logpn1_upper(uint64_t n);

// n(log n + log log n - 1 + (log log n - 2.1454)/log n), a lower bound on
// theta(p_n) claimed for n >= 3.
Interval theta_lower_robin(uint64_t n);

// (1.7454 x^3 + 1.4 x^2 - 0.4)/(x^3 + x^2 - x - 1) for x > 1. The
// surrounding argument needs ratio < 1.7454 and ratio < log x on
// [log 599, inf).
Interval prlb_ratio(Interval x);
Interval prlb_ratio(double x);

// c + coeff (n log n)^2 / log^2(n(log n + log log n)) for n >= 6. The
// default coefficient 0.1119 makes the minorant exceed n^2/14 from 21152
// onward; the 0.0119 variant (below 1/14) never does.
Interval refined_gap_minorant(uint64_t n);
Interval refined_gap_minorant(uint64_t n, Interval coeff);

inline Interval minorant_coeff_default() { return Interval::around(0.1119); }
inline Interval minorant_coeff_prose_variant() { return Interval::around(0.0119); }

// Certified comparison minorant(n) > n^2/14.
Verdict minorant_exceeds_quadratic(uint64_t n, Interval coeff);

struct MinorantCrossover {
    std::optional<uint64_t> first_hold;
    std::optional<uint64_t> last_non_hold; // last index in range not certified Holds
    std::optional<uint64_t> stable_from;   // last_non_hold + 1 when it exists
    uint64_t undecided_count = 0;
    uint64_t searched_to = 0;
};

// Scan n in [6, limit] for minorant(n) > n^2/14.
MinorantCrossover minorant_crossover(Interval coeff, uint64_t limit);

// (x - d x/log^4 x, x + d x/log^4 x) for x > 1, the certified theta band.
std::pair<Interval, Interval> theta_band(double x);

} // namespace primebounds::analytic
