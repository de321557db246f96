#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace mbg {

// Error taxonomy shared by all modules. Every throw site goes through one of
// these so tests can match on the kind instead of parsing messages.
enum class ErrorKind {
    InvalidEdge,
    InvalidRank,
    InvalidParameters,
    IllegalMove,
    StrategyFailure,
    SizeLimit,
    ParseError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-trial seed stream. splitmix64 is a bijection, so distinct trial indices
// give distinct seeds for any fixed master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + splitmix64(index));
}

// mt19937_64 with our own bounded sampler. std::uniform_int_distribution is
// implementation-defined, which would break replay across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n) by rejection; unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) fail(ErrorKind::InvalidParameters, "Rng::below(0)");
        std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
        for (;;) {
            std::uint64_t v = gen_();
            if (v < limit || rem == n - 1) return v % n;
        }
    }

    bool chance(double p) { return static_cast<double>(gen_()) < p * 18446744073709551616.0; }

  private:
    std::mt19937_64 gen_;
};

// Binomial coefficients with overflow guard; boards stay at desk scale but
// ranks must never silently wrap.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (static_cast<unsigned __int128>(1) << 62))
            fail(ErrorKind::InvalidParameters, "binomial overflow: C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace mbg
