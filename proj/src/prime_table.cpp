#include "primebounds/prime_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>

namespace primebounds {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// All primes <= limit by a plain byte sieve; used for base primes only.
std::vector<uint64_t> simple_sieve(uint64_t limit) {
    std::vector<uint8_t> composite(limit + 1, 0);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

// Sieve bound: p_n <= n(log n + log log n) for n >= 6; small n hardcoded.
uint64_t sieve_limit_for(uint64_t n) {
    if (n < 6) return 13;
    double nd = static_cast<double>(n);
    double bound = nd * (std::log(nd) + std::log(std::log(nd)));
    return static_cast<uint64_t>(bound) + 16;
}

constexpr char kMagic[4] = {'P', 'G', 'T', '1'};

struct Fnv1a64 {
    uint64_t state = 14695981039346656037ULL;
    void update(const unsigned char* data, size_t len) {
        for (size_t i = 0; i < len; ++i) {
            state ^= data[i];
            state *= 1099511628211ULL;
        }
    }
    uint64_t digest() const { return state; }
};

void put_u64le(unsigned char* out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

uint64_t get_u64le(const unsigned char* in) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(in[i]) << (8 * i);
    return v;
}

class ChecksummedWriter {
public:
    explicit ChecksummedWriter(std::ostream& os) : os_(os) {}
    void write(const unsigned char* data, size_t len) {
        fnv_.update(data, len);
        os_.write(reinterpret_cast<const char*>(data), std::streamsize(len));
    }
    void write_u64(uint64_t v) {
        unsigned char buf[8];
        put_u64le(buf, v);
        write(buf, 8);
    }
    void write_double(double d) { write_u64(std::bit_cast<uint64_t>(d)); }
    uint64_t digest() const { return fnv_.digest(); }

private:
    std::ostream& os_;
    Fnv1a64 fnv_;
};

class ChecksummedReader {
public:
    explicit ChecksummedReader(std::istream& is) : is_(is) {}
    void read(unsigned char* data, size_t len) {
        is_.read(reinterpret_cast<char*>(data), std::streamsize(len));
        if (is_.gcount() != std::streamsize(len))
            throw CacheError("prime table cache: truncated file");
        fnv_.update(data, len);
    }
    uint64_t read_u64() {
        unsigned char buf[8];
        read(buf, 8);
        return get_u64le(buf);
    }
    double read_double() { return std::bit_cast<double>(read_u64()); }
    uint64_t digest() const { return fnv_.digest(); }

private:
    std::istream& is_;
    Fnv1a64 fnv_;
};

} // namespace

struct PrimeTable::PrimorialCache {
    std::mutex mutex;
    std::vector<mpz_class> products; // products[i] = p_1 ... p_{i+1}
};

PrimeTable::~PrimeTable() = default;
PrimeTable::PrimeTable(PrimeTable&&) noexcept = default;
PrimeTable& PrimeTable::operator=(PrimeTable&&) noexcept = default;

PrimeTable PrimeTable::build(uint64_t n_target, const BuildOptions& opts) {
    if (n_target < 1) throw std::invalid_argument("prime table: n_target must be >= 1");
    if (n_target > opts.max_count)
        throw std::length_error("prime table: n_target exceeds configured memory ceiling");

    PrimeTable table;
    table.product_cap_ = opts.product_cap;
    table.primorials_ = std::make_unique<PrimorialCache>();
    table.primes_.reserve(n_target);
    table.prefix_.reserve(n_target);
    table.theta_.reserve(n_target);

    uint64_t limit = sieve_limit_for(n_target);
    for (;;) {
        table.primes_.clear();
        table.prefix_.clear();
        table.theta_.clear();

        u128 sum = 0;
        double th_lo = 0.0;
        double th_hi = 0.0;
        auto emit = [&](uint64_t p) {
            table.primes_.push_back(p);
            sum += p;
            table.prefix_.push_back(sum);
            double lp = std::log(static_cast<double>(p));
            th_lo = rd::add_down(th_lo, rd::nudge_down(lp, 4));
            th_hi = rd::add_up(th_hi, rd::nudge_up(lp, 4));
            table.theta_.push_back(Interval{th_lo, th_hi});
        };

        auto base = simple_sieve(std::max<uint64_t>(isqrt_u64(limit), 3));
        emit(2);
        uint64_t seg = std::max<uint64_t>(opts.segment_size, 128);
        std::vector<uint8_t> composite;
        for (uint64_t low = 3; low <= limit && table.primes_.size() < n_target;
             low += seg) {
            uint64_t high = std::min(low + seg - 1, limit); // inclusive, odds only
            size_t slots = size_t((high - low) / 2 + 1);    // odd q = low_odd + 2*i
            uint64_t first_odd = low | 1;
            composite.assign(slots, 0);
            for (uint64_t p : base) {
                if (p == 2) continue;
                if (p * p > high) break;
                uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
                if ((start & 1) == 0) start += p;
                for (uint64_t m = start; m <= high; m += 2 * p)
                    composite[size_t((m - first_odd) / 2)] = 1;
            }
            for (size_t i = 0; i < slots; ++i) {
                if (!composite[i]) {
                    emit(first_odd + 2 * i);
                    if (table.primes_.size() == n_target) break;
                }
            }
        }

        if (table.primes_.size() >= n_target) break;
        // Short sieve; extend and redo (the Rosser-type bound makes this
        // unreachable for n >= 6, but the guard keeps small n honest).
        limit += limit / 4 + 64;
    }
    return table;
}

uint64_t PrimeTable::pi_of(uint64_t x) const {
    if (primes_.empty() || x > primes_.back())
        throw std::out_of_range("prime table: pi_of above largest stored prime");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return uint64_t(it - primes_.begin());
}

const mpz_class& PrimeTable::primorial(uint64_t n) const {
    check_index(n);
    if (n > product_cap_)
        throw std::length_error("prime table: primorial index above product cap");
    PrimorialCache& cache = *primorials_;
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.products.empty()) {
        uint64_t top = std::min<uint64_t>(product_cap_, count());
        cache.products.reserve(top);
        mpz_class acc = 1;
        for (uint64_t i = 1; i <= top; ++i) {
            acc *= primes_[i - 1];
            cache.products.push_back(acc);
        }
    }
    return cache.products[n - 1];
}

EuclidNumber PrimeTable::euclid(uint64_t n) const {
    return EuclidNumber{n, mpz_class(primorial(n) - 1)};
}

// Not thread-safe; adjust before sharing the table across threads.
void PrimeTable::set_product_cap(uint64_t cap) {
    primorials_ = std::make_unique<PrimorialCache>();
    product_cap_ = cap;
}

void PrimeTable::save(const std::filesystem::path& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw CacheError("prime table cache: cannot open for writing");
    ChecksummedWriter w(os);
    w.write(reinterpret_cast<const unsigned char*>(kMagic), 4);
    w.write_u64(count());
    for (uint64_t p : primes_) w.write_u64(p);
    for (u128 s : prefix_) {
        w.write_u64(uint64_t(s));       // low limb
        w.write_u64(uint64_t(s >> 64)); // high limb
    }
    for (const Interval& t : theta_) {
        w.write_double(t.lo);
        w.write_double(t.hi);
    }
    uint64_t digest = w.digest();
    unsigned char buf[8];
    put_u64le(buf, digest);
    os.write(reinterpret_cast<const char*>(buf), 8);
    if (!os) throw CacheError("prime table cache: write failed");
}

PrimeTable PrimeTable::load(const std::filesystem::path& path,
                            const BuildOptions& opts) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CacheError("prime table cache: cannot open for reading");
    ChecksummedReader r(is);

    unsigned char magic[4];
    r.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw CacheError("prime table cache: bad magic");

    uint64_t count = r.read_u64();
    if (count > opts.max_count)
        throw CacheError("prime table cache: count exceeds memory ceiling");

    PrimeTable table;
    table.product_cap_ = opts.product_cap;
    table.primorials_ = std::make_unique<PrimorialCache>();
    table.primes_.resize(count);
    table.prefix_.resize(count);
    table.theta_.resize(count);
    for (uint64_t i = 0; i < count; ++i) table.primes_[i] = r.read_u64();
    for (uint64_t i = 0; i < count; ++i) {
        uint64_t lo = r.read_u64();
        uint64_t hi = r.read_u64();
        table.prefix_[i] = (u128(hi) << 64) | lo;
    }
    for (uint64_t i = 0; i < count; ++i) {
        double lo = r.read_double();
        double hi = r.read_double();
        table.theta_[i] = Interval{lo, hi};
    }

    uint64_t expected = r.digest();
    unsigned char buf[8];
    is.read(reinterpret_cast<char*>(buf), 8);
    if (is.gcount() != 8) throw CacheError("prime table cache: truncated file");
    if (get_u64le(buf) != expected)
        throw CacheError("prime table cache: checksum mismatch");
    if (is.peek() != std::char_traits<char>::eof())
        throw CacheError("prime table cache: trailing bytes");
    return table;
}

mpz_class primorial_direct(const PrimeTable& table, uint64_t n) {
    mpz_class acc = 1;
    for (uint64_t i = 1; i <= n; ++i) acc *= table.prime(i);
    return acc;
}

} // namespace primebounds
