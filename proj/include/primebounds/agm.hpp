// Rooin's refinement of the AGM inequality,
//
//   A_n - G_n >= (1/n) sum_{k=2}^n A_{n-1}^{(n-k)/n} (x_n^{1/n} - A_{n-1}^{1/n})^k >= 0,
//
// in general form over sorted non-negative inputs, and specialized to the
// primes via the Robin floor p_{floor((n-1)/2)} of the prefix average:
//
//   Omega(n) = (1/n) sum_{k=2}^n p_{floor((n-1)/2)}^{(n-k)/n}
//                (p_n^{1/n} - (p_n/2 - n/14)^{1/n})^k,
//
// together with its closed-form floor (p_n/2n)(2^{1/n} - 1)^n and the three
// log-scale primorial upper bounds they induce.

#pragma once
#include <cstdint>
#include <iosfwd>
#include <span>

#include "primebounds/interval.hpp"
#include "primebounds/prime_table.hpp"

namespace primebounds::agm {

struct AgmChain {
    uint64_t n;
    Interval mean;        // A_n
    Interval gmean;       // G_n
    Interval refinement;  // the correction sum S, 0 <= S <= A_n - G_n
};

// Inputs must be sorted ascending and non-negative; throws
// std::invalid_argument otherwise. For n = 1 the refinement sum is empty.
AgmChain rooin_chain(std::span<const double> xs);

struct OmegaValue {
    uint64_t n;
    Interval omega;
    Interval omega_floor; // (p_n/2n)(2^{1/n} - 1)^n <= omega
};

// Requires n >= 10 and table coverage; throws std::domain_error below 10.
OmegaValue omega(uint64_t n, const PrimeTable& table);

// Variant using the exact prefix average A_{n-1} instead of its Robin
// floor; diagnostic output only, not used by the catalog.
Interval omega_exact_average(uint64_t n, const PrimeTable& table);

struct RefinedBounds {
    Interval plain;       // n log(p_n/2 - n/14)
    Interval with_omega;  // n log(p_n/2 - n/14 - Omega(n))
    Interval closed_form; // n log((p_n/2)(1 - (2^{1/n}-1)^n/n) - n/14)
};

// The three upper bounds on theta(p_n), ordered with_omega <= closed_form
// <= plain in the certified direction. Requires n >= 10; throws
// std::domain_error on a certified nonpositive log argument.
RefinedBounds refined_upper_bounds(uint64_t n, const PrimeTable& table);

// CSV rows (n, theta, three bounds, omega, omega floor) for n in
// [from, to] stepping by stride.
void write_bounds_csv(std::ostream& os, const PrimeTable& table, uint64_t from,
                      uint64_t to, uint64_t stride);

} // namespace primebounds::agm
