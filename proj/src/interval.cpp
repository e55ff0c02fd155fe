#include "primebounds/interval.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace primebounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this magnitude the fma residual trick can lose the residual sign
// to underflow; nudge unconditionally instead.
constexpr double kTinyGuard = 1e-300;

[[noreturn]] void fail_nonfinite(const char* op) {
    throw std::overflow_error(std::string("interval: non-finite endpoint in ") + op);
}

void check_finite(double lo, double hi, const char* op) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) fail_nonfinite(op);
}

} // namespace

namespace rd {

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

double nudge_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = next_up(x);
    return x;
}

double nudge_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = next_down(x);
    return x;
}

namespace {

// Knuth TwoSum: s = fl(a+b) and the exact residual a+b-s. The residual of
// IEEE addition is always representable, so the sign test is exact.
inline double two_sum_err(double a, double b, double s) {
    double ap = s - b;
    double bp = s - ap;
    double da = a - ap;
    double db = b - bp;
    return da + db;
}

} // namespace

double add_down(double a, double b) {
    double s = a + b;
    return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}

double add_up(double a, double b) {
    double s = a + b;
    return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
    double p = a * b;
    if (std::abs(p) < kTinyGuard) return next_down(p);
    double err = std::fma(a, b, -p); // exact residual a*b - p
    return (err < 0 || (err == 0 && std::signbit(err))) ? next_down(p) : p;
}

double mul_up(double a, double b) {
    double p = a * b;
    if (std::abs(p) < kTinyGuard) return next_up(p);
    double err = std::fma(a, b, -p);
    return err > 0 ? next_up(p) : p;
}

double div_down(double a, double b) {
    double q = a / b;
    if (std::abs(q) < kTinyGuard) return next_down(q);
    double r = std::fma(q, b, -a); // exact residual q*b - a
    bool q_high = (b > 0) ? (r > 0) : (r < 0);
    return q_high ? next_down(q) : q;
}

double div_up(double a, double b) {
    double q = a / b;
    if (std::abs(q) < kTinyGuard) return next_up(q);
    double r = std::fma(q, b, -a);
    bool q_low = (b > 0) ? (r < 0) : (r > 0);
    return q_low ? next_up(q) : q;
}

} // namespace rd

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_string(v); }

Interval Interval::exact(double v) {
    if (!std::isfinite(v)) fail_nonfinite("exact");
    return {v, v};
}

Interval Interval::make(double lo, double hi) {
    check_finite(lo, hi, "make");
    if (lo > hi) throw std::invalid_argument("interval: lo > hi");
    return {lo, hi};
}

Interval Interval::around(double v) {
    if (!std::isfinite(v)) fail_nonfinite("around");
    return {rd::next_down(v), rd::next_up(v)};
}

Interval Interval::from_i128(i128 v) {
    constexpr i128 kExact = i128{1} << 53;
    double d = static_cast<double>(v);
    if (v >= -kExact && v <= kExact) return {d, d};
    return {rd::next_down(d), rd::next_up(d)};
}

Interval Interval::from_u128(u128 v) {
    constexpr u128 kExact = u128{1} << 53;
    double d = static_cast<double>(v);
    if (v <= kExact) return {d, d};
    return {rd::next_down(d), rd::next_up(d)};
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
    std::ostringstream tmp;
    tmp.precision(17);
    tmp << '[' << a.lo << ", " << a.hi << ']';
    return os << tmp.str();
}

std::string to_string(const Interval& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

Interval iv_add(Interval a, Interval b) {
    double lo = rd::add_down(a.lo, b.lo);
    double hi = rd::add_up(a.hi, b.hi);
    check_finite(lo, hi, "add");
    return {lo, hi};
}

Interval iv_sub(Interval a, Interval b) {
    double lo = rd::sub_down(a.lo, b.hi);
    double hi = rd::sub_up(a.hi, b.lo);
    check_finite(lo, hi, "sub");
    return {lo, hi};
}

Interval iv_mul(Interval a, Interval b) {
    double lo = std::min(std::min(rd::mul_down(a.lo, b.lo), rd::mul_down(a.lo, b.hi)),
                         std::min(rd::mul_down(a.hi, b.lo), rd::mul_down(a.hi, b.hi)));
    double hi = std::max(std::max(rd::mul_up(a.lo, b.lo), rd::mul_up(a.lo, b.hi)),
                         std::max(rd::mul_up(a.hi, b.lo), rd::mul_up(a.hi, b.hi)));
    check_finite(lo, hi, "mul");
    return {lo, hi};
}

Interval iv_div(Interval a, Interval b) {
    if (b.contains_zero())
        throw std::domain_error("interval: division by interval containing zero");
    double lo = std::min(std::min(rd::div_down(a.lo, b.lo), rd::div_down(a.lo, b.hi)),
                         std::min(rd::div_down(a.hi, b.lo), rd::div_down(a.hi, b.hi)));
    double hi = std::max(std::max(rd::div_up(a.lo, b.lo), rd::div_up(a.lo, b.hi)),
                         std::max(rd::div_up(a.hi, b.lo), rd::div_up(a.hi, b.hi)));
    check_finite(lo, hi, "div");
    return {lo, hi};
}

Interval iv_neg(Interval a) { return {-a.hi, -a.lo}; }

Interval iv_abs(Interval a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return iv_neg(a);
    return {0.0, std::max(-a.lo, a.hi)};
}

namespace {

// libm results are faithful to well under 1 ulp; the declared widening for
// all transcendentals is 4 ulp per endpoint.
constexpr int kTranscUlps = 4;

Interval widen_transc(double lo, double hi, bool positive_range, const char* op) {
    lo = rd::nudge_down(lo, kTranscUlps);
    hi = rd::nudge_up(hi, kTranscUlps);
    if (positive_range && lo < 0) lo = 0.0;
    check_finite(lo, hi, op);
    return {lo, hi};
}

// Directed x^k for x >= 0 by binary exponentiation; every multiplication is
// rounded in the requested direction, which compounds soundly for
// non-negative factors.
double pow_u64_dir(double x, uint64_t k, bool up) {
    double acc = 1.0;
    double base = x;
    while (k > 0) {
        if (k & 1) acc = up ? rd::mul_up(acc, base) : rd::mul_down(acc, base);
        k >>= 1;
        if (k) base = up ? rd::mul_up(base, base) : rd::mul_down(base, base);
    }
    return acc;
}

// [lo, hi]^k for 0 <= lo <= hi.
Interval pow_int_nonneg(Interval a, uint64_t k) {
    double lo = pow_u64_dir(a.lo, k, false);
    double hi = pow_u64_dir(a.hi, k, true);
    if (lo < 0) lo = 0.0;
    check_finite(lo, hi, "pow_int");
    return {lo, hi};
}

} // namespace

Interval iv_log(Interval a) {
    if (a.lo <= 0) throw std::domain_error("interval: log of nonpositive argument");
    return widen_transc(std::log(a.lo), std::log(a.hi), false, "log");
}

Interval iv_exp(Interval a) {
    return widen_transc(std::exp(a.lo), std::exp(a.hi), true, "exp");
}

Interval iv_pow(Interval a, Interval b) {
    if (a.lo <= 0) throw std::domain_error("interval: pow of nonpositive base");
    // x^y is monotone in each argument separately on x > 0, so the extrema
    // over the box lie at the corners.
    double c0 = std::pow(a.lo, b.lo);
    double c1 = std::pow(a.lo, b.hi);
    double c2 = std::pow(a.hi, b.lo);
    double c3 = std::pow(a.hi, b.hi);
    double lo = std::min(std::min(c0, c1), std::min(c2, c3));
    double hi = std::max(std::max(c0, c1), std::max(c2, c3));
    return widen_transc(lo, hi, true, "pow");
}

Interval iv_pow_int(Interval a, uint64_t k) {
    if (k == 0) return Interval::exact(1.0);
    if (a.lo >= 0) return pow_int_nonneg(a, k);
    if (a.hi <= 0) {
        Interval m = pow_int_nonneg(iv_neg(a), k);
        return (k & 1) ? iv_neg(m) : m;
    }
    // Straddles zero.
    if (k & 1) {
        double lo = -pow_u64_dir(-a.lo, k, true);
        double hi = pow_u64_dir(a.hi, k, true);
        check_finite(lo, hi, "pow_int");
        return {lo, hi};
    }
    return pow_int_nonneg(iv_abs(a), k);
}

Verdict certify_less(Interval a, Interval b) {
    if (a.hi < b.lo) return Verdict::Holds;
    if (a.lo >= b.hi) return Verdict::Fails;
    return Verdict::Undecided;
}

Verdict certify_le(Interval a, Interval b) {
    if (a.hi <= b.lo) return Verdict::Holds;
    if (a.lo > b.hi) return Verdict::Fails;
    return Verdict::Undecided;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(u128(-(v + 1)) + 1);
    return to_string(u128(v));
}

} // namespace primebounds
