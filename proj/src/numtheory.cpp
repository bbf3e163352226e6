#include "szm/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace szm {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k != 0) {
    if (k & 1) {
      r = mulmod(r, a, m);
    }
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

// Brent's variant; n is odd, composite and has no small factors.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        y = f(y);
      }
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min<std::uint64_t>(128, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += 128;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) {
    return;
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) {
      return n == p;
    }
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("factorize: n must be positive");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> result;
  for (std::uint64_t p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result{1};
  for (auto [p, k] : factorize(n)) {
    std::size_t const old = result.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < old; ++j) {
        result.push_back(result[j] * pk);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, k] : factorize(n)) {
    r = r / p * (p - 1);
  }
  return r;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("value does not fit in 64 bits");
  }
  return x.convert_to<std::uint64_t>();
}

}  // namespace szm
