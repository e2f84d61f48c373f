#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "liprime/errors.hpp"
#include "liprime/primes.hpp"
#include "oracles.hpp"

using namespace liprime;
namespace fs = std::filesystem;

namespace {

const PrimeTable& million() {
  static const PrimeTable t = sieve(1'000'000);
  return t;
}

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / "liprime_test_primes";
  fs::create_directories(dir);
  return dir / name;
}

void write_bytes(const fs::path& p, const std::vector<char>& bytes) {
  std::ofstream os(p, std::ios::binary | std::ios::trunc);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::vector<char> read_bytes(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("small sieves") {
  CHECK(sieve(10).primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve(2).primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(sieve(3).primes_up_to(3) == std::vector<std::uint64_t>{2, 3});
  CHECK(sieve(100).prime_count() == 25);
  for (std::uint64_t limit : {2u, 3u, 63u, 64u, 65u, 127u, 128u, 129u, 1000u, 4097u}) {
    const auto t = sieve(limit);
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      const bool expect = oracle::is_prime_trial(n);
      CHECK(t.is_prime(n) == expect);
      count += expect;
    }
    CHECK(t.prime_count() == count);
  }
}

TEST_CASE("table invariants") {
  const auto& t = million();
  CHECK_FALSE(t.is_prime(0));
  CHECK_FALSE(t.is_prime(1));
  CHECK(t.is_prime(2));
  CHECK(t.limit() == 1'000'000);
  CHECK(t.prime_count() == 78498);
  CHECK(t.pi(1e6) == 78498);
}

TEST_CASE("segmented sieve equals an unsegmented sieve up to 1e6") {
  const auto& t = million();
  const auto plain = oracle::plain_sieve(1'000'000);
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) mismatches += (t.is_prime(n) != plain[n]);
  CHECK(mismatches == 0);
}

TEST_CASE("pi lookups") {
  const auto& t = million();
  CHECK(pi(1.0, t) == 0);
  CHECK(pi(0.0, t) == 0);
  CHECK(pi(2.0, t) == 1);
  CHECK(pi(10.0, t) == 4);
  CHECK(pi(10.9, t) == 4);
  CHECK(pi(11.0, t) == 5);
  // against trial division at 1e4 scale
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n <= 10'000; ++n) {
    count += oracle::is_prime_trial(n);
    if (n % 97 == 0 || n == 10'000) REQUIRE(pi(static_cast<double>(n), t) == count);
  }
  CHECK_THROWS_AS(pi(1e6 + 1, t), CapacityError);
  CHECK_THROWS_AS(pi(-1.0, t), CapacityError);
}

TEST_CASE("nth prime") {
  const auto& t = million();
  CHECK(nth_prime(1, t) == 2);
  CHECK(nth_prime(25, t) == 97);
  CHECK(nth_prime(100, t) == 541);
  CHECK(nth_prime(78498, t) == 999983);
  CHECK_THROWS_AS(nth_prime(78499, t), CapacityError);
  CHECK_THROWS_AS(nth_prime(0, t), DomainError);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto p = nth_prime(n, t);
    REQUIRE(t.is_prime(p));
    REQUIRE(pi(static_cast<double>(p), t) == n);
  }
}

TEST_CASE("Chebyshev envelope") {
  const auto& t = million();
  for (double x = 1e3; x <= 1e6; x *= 1.5) {
    const double base = x / std::log(x);
    const double c = static_cast<double>(pi(x, t));
    CHECK(c >= 0.8 * base);
    CHECK(c <= 1.3 * base);
  }
}

TEST_CASE("for_each_prime visits primes in order and stops on request") {
  const auto& t = million();
  std::vector<std::uint64_t> seen;
  t.for_each_prime(30, [&](std::uint64_t p) {
    seen.push_back(p);
    return true;
  });
  CHECK(seen == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  seen.clear();
  t.for_each_prime(1'000'000, [&](std::uint64_t p) {
    seen.push_back(p);
    return seen.size() < 3;
  });
  CHECK(seen.size() == 3);
}

TEST_CASE("sieve limits") {
  CHECK_THROWS_AS(sieve(1), DomainError);
  CHECK_THROWS_AS(sieve(0), DomainError);
  CHECK_THROWS_AS(sieve(1001, 1000), CapacityError);
  CHECK_NOTHROW(sieve(1000, 1000));
  CHECK_THROWS_AS(sieve(kDefaultSieveCapacity + 1), CapacityError);
}

TEST_CASE("Moebius table") {
  const auto mu = mobius_table(100'000);
  CHECK(mu(1) == 1);
  CHECK(mu(6) == 1);
  CHECK(mu(12) == 0);
  CHECK(mu(30) == -1);
  for (std::uint64_t n = 1; n <= 100'000; n += (n < 2000 ? 1 : 37)) REQUIRE(mu(n) == oracle::mobius_factor(n));
  const auto& t = million();
  t.for_each_prime(100'000, [&](std::uint64_t p) {
    REQUIRE(mu(p) == -1);
    if (p * p <= 100'000) REQUIRE(mu(p * p) == 0);
    return true;
  });
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    int sum = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      sum += mu(d);
      if (d * d != n) sum += mu(n / d);
    }
    REQUIRE(sum == 0);
  }
  CHECK_THROWS_AS(mobius_table(0), DomainError);
  CHECK_THROWS_AS(mobius_table(1001, 1000), CapacityError);
  CHECK(mobius_table(1).mu.size() == 2);
}

TEST_CASE("Mertens function stays under N^0.6") {
  const auto mu = mobius_table(100'000);
  long m = 0;
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    m += mu(n);
    if (n == 1000 || n == 10'000 || n == 100'000) {
      MESSAGE("M(" << n << ") = " << m);
      CHECK(std::abs(static_cast<double>(m)) <= std::pow(static_cast<double>(n), 0.6));
    }
  }
}

TEST_CASE("cache round trip and header layout") {
  const auto t = sieve(100'003);
  const auto path = scratch("roundtrip.bin");
  save_prime_table(path, t);
  const auto bytes = read_bytes(path);
  REQUIRE(bytes.size() == 4 + 4 + 8 + 100'003 / 8 + 1);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "LIPR");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0);
  // limit, little-endian
  std::uint64_t limit = 0;
  for (int i = 0; i < 8; ++i) limit |= std::uint64_t(static_cast<unsigned char>(bytes[8 + i])) << (8 * i);
  CHECK(limit == 100'003);
  // byte 16 holds n = 0..7: bits 2, 3, 5, 7
  CHECK(static_cast<unsigned char>(bytes[16]) == 0b10101100);

  const auto back = load_prime_table(path);
  CHECK(back.limit() == t.limit());
  CHECK(back.words() == t.words());
  CHECK(back.prime_count() == t.prime_count());
  CHECK(back.nth_prime(1000) == t.nth_prime(1000));
}

TEST_CASE("cache rejects damaged files") {
  const auto t = sieve(1000);
  const auto good = scratch("good.bin");
  save_prime_table(good, t);
  const auto bytes = read_bytes(good);
  const auto bad = scratch("bad.bin");

  auto mutated = bytes;
  mutated[0] = 'X';
  write_bytes(bad, mutated);
  CHECK_THROWS_AS(load_prime_table(bad), FormatError);

  mutated = bytes;
  mutated[4] = 2;
  write_bytes(bad, mutated);
  CHECK_THROWS_AS(load_prime_table(bad), FormatError);

  mutated = bytes;
  mutated[15] = 0x7f;  // absurd limit
  write_bytes(bad, mutated);
  CHECK_THROWS_AS(load_prime_table(bad), FormatError);

  mutated.assign(bytes.begin(), bytes.end() - 1);
  write_bytes(bad, mutated);
  CHECK_THROWS_AS(load_prime_table(bad), FormatError);

  mutated = bytes;
  mutated.push_back(0);
  write_bytes(bad, mutated);
  CHECK_THROWS_AS(load_prime_table(bad), FormatError);

  mutated.assign(bytes.begin(), bytes.begin() + 10);
  write_bytes(bad, mutated);
  CHECK_THROWS_AS(load_prime_table(bad), FormatError);

  CHECK_THROWS_AS(load_prime_table(scratch("missing.bin")), Error);
  CHECK_THROWS_AS(PrimeTable(100, std::vector<std::uint64_t>(7, 0)), FormatError);
}
