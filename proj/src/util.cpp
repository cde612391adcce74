#include "picky/util.hpp"

#include <tuple>
#include <numeric>

#include "picky/errors.hpp"

namespace picky {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1)
    return 0;
  __int128 t = 0, newt = 1;
  __int128 r = m, newr = a % m;
  while (newr != 0) {
    __int128 q = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - q * newt);
    std::tie(r, newr) = std::make_pair(newr, r - q * newr);
  }
  if (r != 1)
    throw PreconditionError("value is not invertible modulo " +
                            std::to_string(m));
  if (t < 0)
    t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 r = 1 % m, b = base % m;
  while (exp) {
    if (exp & 1)
      r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d)
      continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.emplace_back(d, e);
  }
  if (n > 1)
    f.emplace_back(n, 1);
  return f;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (auto [p, e] : factorize(n))
    ps.push_back(p);
  return ps;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r >> 64)
    throw BoundExceeded("integer overflow in group order");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n))
    r = r / p * (p - 1);
  return r;
}

std::vector<std::uint64_t> units_mod(std::uint64_t n) {
  if (n == 1)
    return {0};
  std::vector<std::uint64_t> u;
  for (std::uint64_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1)
      u.push_back(a);
  return u;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace picky
