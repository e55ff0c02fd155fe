#include "primebounds/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace primebounds::analytic {

namespace {

Interval iv_u64(uint64_t v) { return Interval::exact(static_cast<double>(v)); }

// log n as an interval for an exactly representable integer n.
Interval log_of_u64(uint64_t n) { return iv_log(iv_u64(n)); }

} // namespace

Interval euler_gamma() {
    // 0.577215664901532860606512090082 (30 digits); the nearest double is
    // within half an ulp, so a 1-ulp box contains the constant.
    return Interval::around(0.577215664901532860606512090082);
}

Interval li(Interval x) {
    if (x.lo <= 1.0)
        throw std::domain_error("li: argument must exceed 1");
    Interval lx = iv_log(x);
    Interval sum = iv_add(euler_gamma(), iv_log(lx));

    // sum_k u_k / k with u_k = (log x)^k / k!; stop once the term is below
    // 1e-12 relative and fold a geometric tail bound into the upper side.
    Interval u = lx;
    Interval series = lx; // k = 1 term
    bool converged = false;
    for (int k = 2; k < 2048; ++k) {
        u = iv_div(iv_mul(u, lx), iv_u64(uint64_t(k)));
        Interval term = iv_div(u, iv_u64(uint64_t(k)));
        series = iv_add(series, term);
        if (k > lx.hi && term.hi < 1e-12 * series.lo) {
            double q = rd::div_up(lx.hi, double(k + 1));
            if (q < 1.0) {
                // tail <= term * q / (1 - q)
                double tail = rd::div_up(rd::mul_up(term.hi, q),
                                         rd::sub_down(1.0, q));
                series = Interval::make(series.lo, rd::add_up(series.hi, tail));
                converged = true;
                break;
            }
        }
    }
    if (!converged)
        throw std::domain_error("li: series truncation bound not reached");
    return iv_add(sum, series);
}

Interval li(double x) { return li(Interval::exact(x)); }

Interval constant_c() {
    static const Interval c = [] {
        Interval term_li = iv_mul(Interval::exact(3.0), li(Interval::exact(358801.0)));
        Interval term_frac = iv_div(Interval::exact(358801.0), log_of_u64(599));
        return iv_sub(iv_add(Interval::exact(35995.0), term_frac), term_li);
    }();
    return c;
}

namespace {

Interval dusart_form(double x, Interval second_coeff) {
    if (x <= 1.0)
        throw std::domain_error("dusart bound: argument must exceed 1");
    Interval xi = Interval::exact(x);
    Interval lx = iv_log(xi);
    Interval main = iv_div(xi, lx);
    return iv_mul(main, iv_add(Interval::exact(1.0), iv_div(second_coeff, lx)));
}

} // namespace

Interval dusart_pi_lower(double x) { return dusart_form(x, Interval::exact(1.0)); }

Interval dusart_pi_upper(double x) { return dusart_form(x, Interval::around(1.2762)); }

std::pair<Interval, Interval> rosser_pn_bounds(uint64_t n) {
    if (n < 6)
        throw std::domain_error("rosser_pn_bounds: defined for n >= 6");
    Interval ni = iv_u64(n);
    Interval ln = log_of_u64(n);
    Interval lower = iv_mul(ni, ln);
    Interval upper = iv_mul(ni, iv_add(ln, iv_log(ln)));
    return {lower, upper};
}

Interval pn_floor(uint64_t n) {
    if (n < 1)
        throw std::domain_error("pn_floor: defined for n >= 1");
    if (n == 1) return Interval::exact(0.0); // log 1 = 0 exactly
    return iv_mul(iv_u64(n), log_of_u64(n));
}

Interval logpn1_upper(uint64_t n) {
    if (n < 2)
        throw std::domain_error("logpn1_upper: defined for n >= 2");
    Interval ln = log_of_u64(n);
    Interval lln = iv_log(ln);
    return iv_add(iv_add(ln, lln),
                  iv_div(iv_sub(lln, Interval::around(0.4)), ln));
}

Interval theta_lower_robin(uint64_t n) {
    if (n < 3)
        throw std::domain_error("theta_lower_robin: defined for n >= 3");
    Interval ln = log_of_u64(n);
    Interval lln = iv_log(ln);
    Interval inner = iv_add(iv_sub(iv_add(ln, lln), Interval::exact(1.0)),
                            iv_div(iv_sub(lln, Interval::around(2.1454)), ln));
    return iv_mul(iv_u64(n), inner);
}

Interval prlb_ratio(Interval x) {
    if (x.lo <= 1.0)
        throw std::domain_error("prlb_ratio: denominator root at x = 1, need x > 1");
    Interval x2 = iv_pow_int(x, 2);
    Interval x3 = iv_pow_int(x, 3);
    Interval num = iv_sub(iv_add(iv_mul(Interval::around(1.7454), x3),
                                 iv_mul(Interval::around(1.4), x2)),
                          Interval::around(0.4));
    Interval den = iv_sub(iv_sub(iv_add(x3, x2), x), Interval::exact(1.0));
    return iv_div(num, den);
}

Interval prlb_ratio(double x) { return prlb_ratio(Interval::exact(x)); }

Interval refined_gap_minorant(uint64_t n, Interval coeff) {
    if (n < 6)
        throw std::domain_error("refined_gap_minorant: defined for n >= 6");
    Interval ni = iv_u64(n);
    Interval ln = log_of_u64(n);
    Interval nlogn = iv_mul(ni, ln);
    Interval denom_log = iv_log(iv_mul(ni, iv_add(ln, iv_log(ln))));
    Interval frac = iv_div(iv_mul(coeff, iv_pow_int(nlogn, 2)),
                           iv_pow_int(denom_log, 2));
    return iv_add(constant_c(), frac);
}

Interval refined_gap_minorant(uint64_t n) {
    return refined_gap_minorant(n, minorant_coeff_default());
}

Verdict minorant_exceeds_quadratic(uint64_t n, Interval coeff) {
    Interval rhs = iv_div(iv_mul(iv_u64(n), iv_u64(n)), Interval::exact(14.0));
    return certify_less(rhs, refined_gap_minorant(n, coeff));
}

MinorantCrossover minorant_crossover(Interval coeff, uint64_t limit) {
    MinorantCrossover out;
    out.searched_to = limit;
    for (uint64_t n = 6; n <= limit; ++n) {
        Verdict v = minorant_exceeds_quadratic(n, coeff);
        if (v == Verdict::Holds) {
            if (!out.first_hold) out.first_hold = n;
        } else {
            out.last_non_hold = n;
            if (v == Verdict::Undecided) ++out.undecided_count;
        }
    }
    if (out.last_non_hold && *out.last_non_hold < limit)
        out.stable_from = *out.last_non_hold + 1;
    else if (!out.last_non_hold)
        out.stable_from = 6;
    return out;
}

std::pair<Interval, Interval> theta_band(double x) {
    if (x <= 1.0)
        throw std::domain_error("theta_band: defined for x > 1");
    Interval xi = Interval::exact(x);
    Interval log4 = iv_pow_int(iv_log(xi), 4);
    Interval radius = iv_div(iv_mul(Interval::exact(double(kThetaBandD)), xi), log4);
    return {iv_sub(xi, radius), iv_add(xi, radius)};
}

} // namespace primebounds::analytic
