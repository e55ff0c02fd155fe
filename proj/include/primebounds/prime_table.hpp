// Immutable table of the first N primes with exact 128-bit prefix sums and
// certified theta prefix intervals, theta(p_n) = sum_{i<=n} log p_i.
//
// Indices are 1-based: prime(1) = 2, prime(2) = 3. The table is built by a
// segmented sieve of Eratosthenes sized from the n(log n + log log n) upper
// bound on p_n (valid for n >= 6), with a re-sieve extension if the first
// pass comes up short. After build the table is read-only and safe to share
// across threads.

#pragma once
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "primebounds/interval.hpp"
#include "primebounds/wide.hpp"

namespace primebounds {

struct BuildOptions {
    // Numbers per sieve segment; default tuned to stay cache-resident.
    uint64_t segment_size = uint64_t{1} << 20;
    // Memory ceiling in primes (~40 bytes each across the three arrays).
    uint64_t max_count = 50'000'000;
    // Largest index served by the exact primorial cache.
    uint64_t product_cap = 5000;
};

// Thrown by load() on bad magic, truncation, or checksum mismatch.
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// E_n = p_1 p_2 ... p_n - 1.
struct EuclidNumber {
    uint64_t n;
    mpz_class value;
};

class PrimeTable {
public:
    ~PrimeTable();
    PrimeTable(PrimeTable&&) noexcept;
    PrimeTable& operator=(PrimeTable&&) noexcept;
    PrimeTable(const PrimeTable&) = delete;
    PrimeTable& operator=(const PrimeTable&) = delete;

    static PrimeTable build(uint64_t n_target, const BuildOptions& opts = {});
    static PrimeTable load(const std::filesystem::path& path,
                           const BuildOptions& opts = {});
    void save(const std::filesystem::path& path) const;

    uint64_t count() const { return primes_.size(); }

    // n-th prime, 1-based; throws std::out_of_range outside [1, count].
    uint64_t prime(uint64_t n) const {
        check_index(n);
        return primes_[n - 1];
    }

    // Exact sum of the first n primes.
    u128 prefix_sum(uint64_t n) const {
        check_index(n);
        return prefix_[n - 1];
    }

    // Certified interval containing theta(p_n).
    Interval theta(uint64_t n) const {
        check_index(n);
        return theta_[n - 1];
    }

    // Number of primes <= x, by binary search. Requires x <= prime(count);
    // throws std::out_of_range above that (the count would be truncated).
    uint64_t pi_of(uint64_t x) const;

    // Exact primorial p_1 p_2 ... p_n; requires n <= product_cap. The cache
    // backing this is built once on first use and shared afterwards.
    const mpz_class& primorial(uint64_t n) const;

    EuclidNumber euclid(uint64_t n) const;

    uint64_t product_cap() const { return product_cap_; }
    void set_product_cap(uint64_t cap);

    std::span<const uint64_t> primes_view() const { return primes_; }
    std::span<const u128> prefix_view() const { return prefix_; }
    std::span<const Interval> theta_view() const { return theta_; }

private:
    struct PrimorialCache;

    PrimeTable() = default;
    void check_index(uint64_t n) const {
        if (n < 1 || n > primes_.size())
            throw std::out_of_range("prime table: index out of range");
    }

    std::vector<uint64_t> primes_;
    std::vector<u128> prefix_;
    std::vector<Interval> theta_;
    uint64_t product_cap_ = 5000;
    mutable std::unique_ptr<PrimorialCache> primorials_;
};

// One-off exact primorial by direct multiplication, independent of the
// table's cache and cap. Used as the Undecided fallback and by tests.
mpz_class primorial_direct(const PrimeTable& table, uint64_t n);

} // namespace primebounds
