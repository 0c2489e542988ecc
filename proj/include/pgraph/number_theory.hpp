#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgraph {

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: argument must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// All positive divisors of n in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Distinct prime divisors of n, ascending. Empty for n = 1.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_divisors: argument must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

inline bool is_prime_power(std::uint64_t n) { return prime_divisors(n).size() == 1; }

struct CongruenceSystem {
  // (residue, modulus) pairs; moduli must be pairwise coprime
  std::vector<std::pair<std::int64_t, std::uint64_t>> congruences;
};

struct ResidueClass {
  std::uint64_t value;
  std::uint64_t modulus;
};

namespace detail {

// extended gcd: returns g and x with a*x ≡ g (mod m), for solving a*x ≡ 1
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

/// Solves a system of simultaneous congruences with pairwise coprime moduli.
/// Non-coprime moduli are rejected with the offending pair and gcd in the message.
inline ResidueClass crt_solve(const CongruenceSystem& sys) {
  const auto& cs = sys.congruences;
  if (cs.empty()) throw std::invalid_argument("crt_solve: empty system");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].second == 0) throw std::invalid_argument("crt_solve: zero modulus");
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::uint64_t g = std::gcd(cs[i].second, cs[j].second);
      if (g != 1)
        throw std::invalid_argument("crt_solve: moduli " + std::to_string(cs[i].second) +
                                    " and " + std::to_string(cs[j].second) +
                                    " share gcd " + std::to_string(g));
    }
  }
  auto reduce = [](std::int64_t r, std::uint64_t m) {
    std::int64_t v = r % static_cast<std::int64_t>(m);
    if (v < 0) v += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(v);
  };
  std::uint64_t value = reduce(cs[0].first, cs[0].second);
  std::uint64_t modulus = cs[0].second;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    std::uint64_t mi = cs[i].second;
    std::uint64_t ri = reduce(cs[i].first, mi);
    // x = value + modulus * t with t ≡ (ri − value) * modulus⁻¹ (mod mi)
    std::uint64_t diff = (ri + mi - value % mi) % mi;
    std::uint64_t t = (static_cast<unsigned __int128>(diff) *
                       detail::mod_inverse(modulus % mi, mi)) % mi;
    unsigned __int128 wide = static_cast<unsigned __int128>(modulus) * t + value;
    unsigned __int128 prod = static_cast<unsigned __int128>(modulus) * mi;
    if (prod > UINT64_MAX) throw std::overflow_error("crt_solve: modulus product overflows");
    value = static_cast<std::uint64_t>(wide % prod);
    modulus = static_cast<std::uint64_t>(prod);
  }
  return {value, modulus};
}

struct PhiIdentitySides {
  std::uint64_t lhs;  // totient-weighted sum over prime powers p^1..p^n
  std::uint64_t rhs;  // twice the binomial coefficient C(p^n − 1, 2)
};

/// Evaluates both sides of the identity
///   Σ_{i=1..n} φ(p^i)·(2p^i − φ(p^i) − 3)  =  2·C(p^n − 1, 2)
/// with exact arithmetic; overflow raises instead of wrapping.
inline PhiIdentitySides phi_identity_sides(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("phi_identity_sides: p must be prime");
  if (n == 0) throw std::invalid_argument("phi_identity_sides: n must be positive");
  std::uint64_t lhs = 0, pk = 1;
  for (unsigned i = 1; i <= n; ++i) {
    if (__builtin_mul_overflow(pk, p, &pk))
      throw std::overflow_error("phi_identity_sides: p^i overflows");
    std::uint64_t phi = pk - pk / p;  // φ(p^i) = p^i − p^{i−1}
    std::uint64_t weight = pk + pk / p - 3;  // 2p^i − φ(p^i) − 3
    std::uint64_t term;
    if (__builtin_mul_overflow(phi, weight, &term) ||
        __builtin_add_overflow(lhs, term, &lhs))
      throw std::overflow_error("phi_identity_sides: sum overflows");
  }
  std::uint64_t v = pk - 1, rhs;
  if (__builtin_mul_overflow(v, v - 1, &rhs))
    throw std::overflow_error("phi_identity_sides: binomial overflows");
  return {lhs, rhs};
}

}  // namespace pgraph
