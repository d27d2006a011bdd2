#include "surdeq/pell.hpp"

#include <climits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace surdeq {

namespace {

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long default_scan_bound(const Int& q) {
  Int bound = 4 * q * q;
  if (!bound.fits_ulong_p()) return ULONG_MAX;
  return mpz_get_ui(bound.get_mpz_t());
}

UnitGroupData compute_unit_group_data(const Int& v, const Int& q,
                                      unsigned long scan_bound) {
  const Unit fu = fundamental_unit(v);
  unsigned long k0 = 0;
  if (q == 1) {
    k0 = 1;
  } else {
    // Walk powers of the fundamental unit modulo q until q | c. The pair
    // sequence mod q is purely periodic, so the hit comes within the order
    // of the unit group of Z[sqrt(v)]/q.
    Int r = mod_nonneg(fu.r, q);
    Int c = mod_nonneg(fu.c, q);
    for (unsigned long k = 1; k <= scan_bound; ++k) {
      if (c == 0) {
        k0 = k;
        break;
      }
      Int r_next = mod_nonneg(r * fu.r + c * fu.c * v, q);
      c = mod_nonneg(r * fu.c + c * fu.r, q);
      r = r_next;
    }
    if (k0 == 0) {
      throw ScanBoundExceeded(
          "no power of the fundamental unit with q | c within the scan "
          "bound");
    }
  }

  const Int q2 = q * q;
  auto [r0, c0] = unit_pow(fu, v, k0, q2);
  UnitGroupData data;
  data.v = v;
  data.q = q;
  data.s = fu.r;
  data.t = fu.c;
  data.k0 = k0;
  data.r0_mod = r0;
  data.c0_mod = c0;
  data.q0 = gcd(c0, q2) / q;
  return data;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Unit& u) {
  return os << u.r << " + " << u.c << "*sqrt(v) [norm " << u.norm << "]";
}

Unit make_unit(const Int& r, const Int& c, const Int& v) {
  Unit u{abs(r), abs(c), 0};
  const Int n = u.r * u.r - u.c * u.c * v;
  if (n == 1) {
    u.norm = 1;
  } else if (n == -1) {
    u.norm = -1;
  } else {
    throw std::logic_error("unit norm is not ±1");
  }
  return u;
}

Unit unit_mul(const Unit& a, const Unit& b, const Int& v) {
  return make_unit(a.r * b.r + a.c * b.c * v, a.r * b.c + a.c * b.r, v);
}

Unit unit_pow(const Unit& u, const Int& v, unsigned long k) {
  Unit result = make_unit(1, 0, v);
  Unit base = u;
  while (k > 0) {
    if (k & 1UL) result = unit_mul(result, base, v);
    k >>= 1UL;
    if (k > 0) base = unit_mul(base, base, v);
  }
  return result;
}

std::pair<Int, Int> unit_pow(const Unit& u, const Int& v, unsigned long k,
                             const Int& modulus) {
  if (modulus <= 0) throw DomainError("modulus must be positive");
  Int rr = 1 % modulus;
  Int rc = 0;
  Int br = mod_nonneg(u.r, modulus);
  Int bc = mod_nonneg(u.c, modulus);
  while (k > 0) {
    if (k & 1UL) {
      Int nr = mod_nonneg(rr * br + rc * bc * v, modulus);
      rc = mod_nonneg(rr * bc + rc * br, modulus);
      rr = nr;
    }
    k >>= 1UL;
    if (k > 0) {
      Int nr = mod_nonneg(br * br + bc * bc * v, modulus);
      bc = mod_nonneg(2 * br * bc, modulus);
      br = nr;
    }
  }
  return {rr, rc};
}

Unit fundamental_unit(const Int& v) {
  if (v < 2) {
    if (v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0) {
      throw PerfectSquareRadicand("v must not be a perfect square");
    }
    throw DomainError("v must be a positive integer >= 2");
  }
  const CFExpansion e = expand(make_surd(0, 1, v));
  // sqrt(v) has pre-period [a0]; the convergent over a0, b1, ..., b_{k-1}
  // (stopping one short of closing the period) is the fundamental solution.
  const std::size_t period_len = e.period.size();
  Int h_prev = 1, h = e.preperiod.at(0);
  Int k_prev = 0, k = 1;
  for (std::size_t i = 0; i + 1 < period_len; ++i) {
    const Int& a = e.period[i];
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return make_unit(h, k, v);
}

UnitGroupData unit_group_data(const Int& v, const Int& q,
                              unsigned long scan_bound) {
  if (q < 1) throw DomainError("q must be a positive integer");
  static std::mutex cache_mutex;
  static std::map<std::pair<Int, Int>, UnitGroupData> cache;

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({v, q});
  if (it != cache.end()) return it->second;
  UnitGroupData data = compute_unit_group_data(
      v, q, scan_bound == 0 ? default_scan_bound(q) : scan_bound);
  cache.emplace(std::make_pair(v, q), data);
  return data;
}

std::optional<Unit> solution_with_gcd(const Int& v, const Int& q,
                                      const Int& q1) {
  if (q1 < 1 || q % q1 != 0) {
    throw InvalidDivisor("q1 must be a positive divisor of q");
  }
  if (q1 == q) return make_unit(1, 0, v);

  const UnitGroupData data = unit_group_data(v, q);
  if (q1 % data.q0 != 0) return std::nullopt;

  const Int j = q1 / data.q0;
  Int exponent = Int(data.k0) * j;
  if (!exponent.fits_ulong_p()) {
    throw std::overflow_error("unit exponent does not fit a machine word");
  }
  Unit u = unit_pow(make_unit(data.s, data.t, v), v,
                    mpz_get_ui(exponent.get_mpz_t()));
  if (gcd(u.c, q * q) != q * q1) {
    throw std::logic_error("constructed unit misses the prescribed gcd");
  }
  return u;
}

}  // namespace surdeq
