#include "liprime/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "liprime/errors.hpp"

namespace liprime {

namespace {

constexpr std::uint64_t kOddMask = 0xAAAAAAAAAAAAAAAAULL;
// 2^21 integers per segment: 256 KiB of bits.
constexpr std::uint64_t kSegmentWords = 1ULL << 15;

std::uint64_t word_count(std::uint64_t limit) { return limit / 64 + 1; }

std::vector<std::uint32_t> small_primes(std::uint64_t bound) {
  std::vector<char> composite(bound + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> words)
    : limit_(limit), words_(std::move(words)) {
  if (words_.size() != word_count(limit_)) {
    throw FormatError("PrimeTable: bitset has " + std::to_string(words_.size()) +
                      " words, expected " + std::to_string(word_count(limit_)));
  }
  // Bits past the limit must be clear so popcounts stay exact.
  words_.back() &= mask_through(limit_ % 64);
  build_checkpoints();
}

void PrimeTable::build_checkpoints() {
  const std::size_t blocks = words_.size() / kBlockWords + 1;
  checkpoints_.assign(blocks + 1, 0);
  std::uint64_t running = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (w % kBlockWords == 0) checkpoints_[w / kBlockWords] = running;
    running += static_cast<std::uint64_t>(std::popcount(words_[w]));
  }
  for (std::size_t b = (words_.size() + kBlockWords - 1) / kBlockWords; b <= blocks; ++b) {
    checkpoints_[b] = running;
  }
  total_ = running;
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw CapacityError("is_prime: " + std::to_string(n) + " exceeds table limit");
  return (words_[n / 64] >> (n % 64)) & 1ULL;
}

std::uint64_t PrimeTable::pi(double x) const {
  if (std::isnan(x) || x < 0.0 || x > static_cast<double>(limit_)) {
    throw CapacityError("pi: x = " + std::to_string(x) + " outside [0, " +
                        std::to_string(limit_) + "]");
  }
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  const std::uint64_t w = n / 64;
  const std::uint64_t b = w / kBlockWords;
  std::uint64_t count = checkpoints_[b];
  for (std::uint64_t i = b * kBlockWords; i < w; ++i) {
    count += static_cast<std::uint64_t>(std::popcount(words_[i]));
  }
  count += static_cast<std::uint64_t>(std::popcount(words_[w] & mask_through(n % 64)));
  return count;
}

std::uint64_t PrimeTable::nth_prime(std::uint64_t n) const {
  if (n < 1) throw DomainError("nth_prime: n must be >= 1");
  if (n > total_) {
    throw CapacityError("nth_prime: n = " + std::to_string(n) + " exceeds pi(" +
                        std::to_string(limit_) + ") = " + std::to_string(total_));
  }
  // Last block whose starting count is below n.
  const auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), n);
  std::size_t b = static_cast<std::size_t>(it - checkpoints_.begin()) - 1;
  std::uint64_t remaining = n - checkpoints_[b];
  for (std::size_t w = b * kBlockWords; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    const auto c = static_cast<std::uint64_t>(std::popcount(bits));
    if (c < remaining) {
      remaining -= c;
      continue;
    }
    for (std::uint64_t k = 1; k < remaining; ++k) bits &= bits - 1;
    return w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
  }
  throw CapacityError("nth_prime: table inconsistent");
}

std::vector<std::uint64_t> PrimeTable::primes_up_to(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  if (limit_ == 0) return out;
  out.reserve(static_cast<std::size_t>(pi(static_cast<double>(std::min(bound, limit_)))));
  for_each_prime(bound, [&](std::uint64_t p) {
    out.push_back(p);
    return true;
  });
  return out;
}

PrimeTable sieve(std::uint64_t limit, std::uint64_t capacity) {
  if (limit < 2) throw DomainError("sieve: limit must be >= 2");
  if (limit > capacity) {
    throw CapacityError("sieve: limit " + std::to_string(limit) + " exceeds capacity " +
                        std::to_string(capacity));
  }
  const std::uint64_t nwords = word_count(limit);
  std::vector<std::uint64_t> words(nwords, kOddMask);

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const auto base = small_primes(root);
  // next[j]: next odd multiple of base[j] still to be crossed off.
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    const std::uint64_t p = base[j];
    next[j] = p * p;
  }

  const std::uint64_t span = nwords * 64;
  for (std::uint64_t seg_word = 0; seg_word < nwords; seg_word += kSegmentWords) {
    const std::uint64_t hi = std::min(span, (seg_word + kSegmentWords) * 64);
    std::uint64_t* seg = words.data();
    for (std::size_t j = 1; j < base.size(); ++j) {  // skip 2: evens never set
      const std::uint64_t p = base[j];
      const std::uint64_t step = 2 * p;
      std::uint64_t m = next[j];
      for (; m < hi; m += step) seg[m >> 6] &= ~(1ULL << (m & 63));
      next[j] = m;
    }
  }
  words[0] &= ~(1ULL << 1);  // 1 is not prime
  words[0] |= 1ULL << 2;     // 2 is
  return PrimeTable(limit, std::move(words));
}

std::uint64_t pi(double x, const PrimeTable& table) { return table.pi(x); }

std::uint64_t nth_prime(std::uint64_t n, const PrimeTable& table) { return table.nth_prime(n); }

MobiusTable mobius_table(std::uint64_t limit, std::uint64_t capacity) {
  if (limit < 1) throw DomainError("mobius_table: limit must be >= 1");
  if (limit > capacity) {
    throw CapacityError("mobius_table: limit " + std::to_string(limit) +
                        " exceeds capacity " + std::to_string(capacity));
  }
  MobiusTable t;
  t.limit = limit;
  t.mu.assign(limit + 1, 0);
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  t.mu[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
      t.mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = i * p;
      if (p > spf[i] || m > limit) break;
      spf[m] = p;
      t.mu[m] = (p == spf[i]) ? 0 : static_cast<std::int8_t>(-t.mu[i]);
    }
  }
  return t;
}

namespace {

constexpr std::array<char, 4> kMagic = {'L', 'I', 'P', 'R'};

template <typename T>
void put_le(std::ostream& os, T v) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  }
  os.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes{};
  is.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!is) throw FormatError("prime cache: truncated header");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

void save_prime_table(const std::filesystem::path& path, const PrimeTable& table) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("prime cache: cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, kCacheFormatVersion);
  put_le<std::uint64_t>(os, table.limit());
  const std::uint64_t nbytes = table.limit() / 8 + 1;
  std::vector<char> buf(nbytes);
  const auto& words = table.words();
  for (std::uint64_t i = 0; i < nbytes; ++i) {
    buf[i] = static_cast<char>((words[i / 8] >> (8 * (i % 8))) & 0xFF);
  }
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!os) throw Error("prime cache: write failed for " + path.string());
}

PrimeTable load_prime_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("prime cache: cannot open " + path.string());
  std::array<char, 4> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw FormatError("prime cache: bad magic in " + path.string());
  const auto version = get_le<std::uint32_t>(is);
  if (version != kCacheFormatVersion) {
    throw FormatError("prime cache: unsupported format version " + std::to_string(version));
  }
  const auto limit = get_le<std::uint64_t>(is);
  if (limit < 2 || limit > (1ULL << 40)) {
    throw FormatError("prime cache: implausible limit " + std::to_string(limit));
  }
  const std::uint64_t nbytes = limit / 8 + 1;
  std::vector<unsigned char> buf(nbytes);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(nbytes));
  if (static_cast<std::uint64_t>(is.gcount()) != nbytes) {
    throw FormatError("prime cache: truncated bitset");
  }
  if (is.peek() != std::char_traits<char>::eof()) {
    throw FormatError("prime cache: trailing bytes after bitset");
  }
  std::vector<std::uint64_t> words(word_count(limit), 0);
  for (std::uint64_t i = 0; i < nbytes; ++i) {
    words[i / 8] |= static_cast<std::uint64_t>(buf[i]) << (8 * (i % 8));
  }
  return PrimeTable(limit, std::move(words));
}

}  // namespace liprime
