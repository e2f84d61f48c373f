#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace liprime {

inline constexpr std::uint64_t kDefaultSieveCapacity = 1'000'000'000ULL;

/// Primality flags for 0..limit stored one bit per integer, plus cumulative
/// counts every kBlockWords words so that pi(x) costs at most eight popcounts.
/// Immutable once built.
class PrimeTable {
 public:
  static constexpr std::size_t kBlockWords = 8;

  PrimeTable() = default;

  /// Wraps an existing bitset (bit n of word n/64 set iff n is prime).
  /// Throws FormatError if the word count does not match the limit.
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> words);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }
  [[nodiscard]] bool is_prime(std::uint64_t n) const;
  /// pi(limit).
  [[nodiscard]] std::uint64_t prime_count() const { return total_; }
  /// Number of primes <= x; throws CapacityError outside [0, limit].
  [[nodiscard]] std::uint64_t pi(double x) const;
  /// The n-th prime (p_1 = 2); throws CapacityError when n > pi(limit).
  [[nodiscard]] std::uint64_t nth_prime(std::uint64_t n) const;
  /// Primes <= bound (bound clipped to limit), ascending.
  [[nodiscard]] std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) const;

  /// Calls fn(p) for each prime p <= bound in ascending order. fn may return
  /// false to stop early.
  template <typename Fn>
  void for_each_prime(std::uint64_t bound, Fn&& fn) const {
    if (words_.empty()) return;
    if (bound > limit_) bound = limit_;
    const std::uint64_t last_word = bound / 64;
    for (std::uint64_t w = 0; w <= last_word; ++w) {
      std::uint64_t bits = words_[w];
      if (w == last_word) bits &= mask_through(bound % 64);
      while (bits != 0) {
        const std::uint64_t p = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
        if (!fn(p)) return;
        bits &= bits - 1;
      }
    }
  }

 private:
  static std::uint64_t mask_through(std::uint64_t bit) {
    return bit == 63 ? ~0ULL : ((1ULL << (bit + 1)) - 1);
  }
  void build_checkpoints();

  std::uint64_t limit_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> checkpoints_;  // primes in words [0, kBlockWords * b)
};

/// Segmented sieve of Eratosthenes over odd numbers, one L2-sized segment at a
/// time. Requires 2 <= limit <= capacity.
PrimeTable sieve(std::uint64_t limit, std::uint64_t capacity = kDefaultSieveCapacity);

std::uint64_t pi(double x, const PrimeTable& table);
std::uint64_t nth_prime(std::uint64_t n, const PrimeTable& table);

inline constexpr std::uint64_t kDefaultMobiusCapacity = 100'000'000ULL;

struct MobiusTable {
  std::uint64_t limit = 0;
  std::vector<std::int8_t> mu;  // mu[0] unused (0)

  [[nodiscard]] int operator()(std::uint64_t n) const { return mu.at(n); }
};

/// mu(1..limit) by a linear sieve over smallest prime factors.
MobiusTable mobius_table(std::uint64_t limit,
                         std::uint64_t capacity = kDefaultMobiusCapacity);

// On-disk cache of a PrimeTable, little-endian:
//   "LIPR" | u32 format version | u64 limit | ceil((limit+1)/8) bitset bytes
// with bit (n % 8) of byte n / 8 set iff n is prime.
inline constexpr std::uint32_t kCacheFormatVersion = 1;

void save_prime_table(const std::filesystem::path& path, const PrimeTable& table);
/// Throws FormatError on bad magic, version, or size.
PrimeTable load_prime_table(const std::filesystem::path& path);

}  // namespace liprime
