#include "surdeq/equiv.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace surdeq {

namespace {

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_coprime(const Int& m, const Int& q) {
  if (gcd(m, q) != 1) {
    throw NotCoprime("m must be coprime to q");
  }
}

void require_positive_q(const Int& q) {
  if (q < 1) throw DomainError("q must be a positive integer");
}

Int euler_phi(Int n) {
  Int phi = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    phi *= p - 1;
    while (n % p == 0) {
      n /= p;
      phi *= p;
    }
  }
  if (n > 1) phi *= n - 1;
  return phi;
}

GLMatrix translation(const Int& k) { return GLMatrix{1, k, 0, 1}; }

// Witness for reduced representatives 0 <= m, n < q with q0 | m - n.
// Follows the constructive direction of the Pell criterion: pick a unit
// (r, c) with gcd(c, q^2) = q*q1 for q1 = gcd(m - n, q); if the congruence
//   c1 m n + r m1 == 0  (mod q/q1),   c = q q1 c1,  m - n = q1 m1,
// fails, replace the unit by its k-th power where k solves
//   k c1 n m + r m1 == 0  (mod q/q1)
// and is the smallest positive representative coprime to q. Then
//   d = -q1 c1 m + r,   a = c(m+n)/q + d,
//   b = (-d(m-n)q - c m^2 + c v q^2) / q^2
// are integers and (a, b, c, d) realizes y = (ax + b)/(cx + d).
GLMatrix witness_reduced(const Int& v, const Int& q, const Int& m,
                         const Int& n) {
  if (m == n) return GLMatrix{1, 0, 0, 1};

  const Int q1 = gcd(m - n, q);
  const Int m1 = (m - n) / q1;
  const Int q_rest = q / q1;

  auto base = solution_with_gcd(v, q, q1);
  if (!base.has_value()) {
    throw std::logic_error("decision said equivalent but no unit exists");
  }
  Unit u = *base;
  Int c1 = u.c / (q * q1);

  if ((c1 * m * n + u.r * m1) % q_rest != 0) {
    // Solve k * (c1 n m) == -r m1 (mod q_rest); everything in sight is
    // invertible mod q_rest.
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(c1 * n * m).get_mpz_t(),
                   q_rest.get_mpz_t()) == 0) {
      throw std::logic_error("c1*n*m not invertible mod q/q1");
    }
    Int k = mod_nonneg(-u.r * m1 * inv, q_rest);
    Int steps = 0;
    while (gcd(k, q) != 1) {
      k += q_rest;
      if (++steps > q) {
        throw std::logic_error("no exponent coprime to q in residue class");
      }
    }
    if (!k.fits_ulong_p()) {
      throw std::overflow_error("witness exponent does not fit a machine word");
    }
    u = unit_pow(u, v, mpz_get_ui(k.get_mpz_t()));
    c1 = u.c / (q * q1);
    if ((c1 * m * n + u.r * m1) % q_rest != 0) {
      throw std::logic_error("power trick failed to fix the congruence");
    }
  }

  const Int c = u.c;
  const Int d = -q1 * c1 * m + u.r;
  const Int a = c * (m + n) / q + d;
  const Int b_num = -d * (m - n) * q - c * m * m + c * v * q * q;
  if (b_num % (q * q) != 0) {
    throw std::logic_error("matrix entry b is not integral");
  }
  const Int b = b_num / (q * q);
  return GLMatrix{a, b, c, d};
}

}  // namespace

GLMatrix operator*(const GLMatrix& lhs, const GLMatrix& rhs) {
  return GLMatrix{lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                  lhs.c * rhs.a + lhs.d * rhs.c,
                  lhs.c * rhs.b + lhs.d * rhs.d};
}

std::ostream& operator<<(std::ostream& os, const GLMatrix& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d
            << "]]";
}

bool equivalent(const Int& v, const Int& q, const Int& m, const Int& n) {
  require_positive_q(q);
  const Int mr = mod_nonneg(m, q);
  const Int nr = mod_nonneg(n, q);
  require_coprime(mr, q);
  require_coprime(nr, q);
  const UnitGroupData data = unit_group_data(v, q);
  return (mr - nr) % data.q0 == 0;
}

bool inverse_periods_decide(const Int& v, const Int& q, const Int& m,
                            const Int& n) {
  require_positive_q(q);
  const Int mr = mod_nonneg(m, q);
  const Int nr = mod_nonneg(n, q);
  require_coprime(mr, q);
  require_coprime(nr, q);
  const UnitGroupData data = unit_group_data(v, q);
  return (mr + nr) % data.q0 == 0;
}

bool self_inverse_decide(const Int& v, const Int& q, const Int& m) {
  require_positive_q(q);
  require_coprime(mod_nonneg(m, q), q);
  const UnitGroupData data = unit_group_data(v, q);
  const Int q1_prime = (q % 2 == 0) ? 2 : 1;
  return q1_prime % data.q0 == 0;
}

ClassReport class_summary(const Int& v, const Int& q) {
  require_positive_q(q);
  const UnitGroupData data = unit_group_data(v, q);

  std::map<Int, std::vector<Int>> buckets;
  for (Int m = 0; m < q; ++m) {
    if (gcd(m, q) == 1) buckets[mod_nonneg(m, data.q0)].push_back(m);
  }

  ClassReport report;
  report.v = v;
  report.q = q;
  report.q0 = data.q0;
  report.num_classes = Int(static_cast<unsigned long>(buckets.size()));
  report.class_size = 0;
  for (auto& [residue, members] : buckets) {
    if (report.class_size == 0) {
      report.class_size = Int(static_cast<unsigned long>(members.size()));
    } else if (report.class_size !=
               Int(static_cast<unsigned long>(members.size()))) {
      throw std::logic_error("equivalence classes are not uniform in size");
    }
    report.classes.push_back(std::move(members));
  }
  if (report.num_classes != euler_phi(data.q0) ||
      report.class_size * report.num_classes != euler_phi(q)) {
    throw std::logic_error("class counts disagree with phi(q0), phi(q)");
  }
  return report;
}

GLMatrix witness_matrix(const Int& v, const Int& q, const Int& m,
                        const Int& n) {
  require_positive_q(q);
  if (!equivalent(v, q, m, n)) {
    throw NotEquivalent("m/q + sqrt(v) and n/q + sqrt(v) are not equivalent");
  }
  const Int mr = mod_nonneg(m, q);
  const Int nr = mod_nonneg(n, q);
  const Int shift_m = (m - mr) / q;
  const Int shift_n = (n - nr) / q;

  GLMatrix matrix = witness_reduced(v, q, mr, nr);
  // Honor the caller's representatives: x = x_red + shift_m, y = y_red +
  // shift_n, so conjugate with integer translations.
  matrix = translation(shift_n) * matrix * translation(-shift_m);

  const Int det = matrix.det();
  if (det != 1 && det != -1) {
    throw std::logic_error("witness determinant is not ±1");
  }
  if (apply_moebius(matrix, make_surd(m, q, v)) != make_surd(n, q, v)) {
    throw std::logic_error("witness matrix does not map x to y");
  }
  return matrix;
}

Surd apply_moebius(const GLMatrix& m, const Surd& x) {
  if (m.c == 0 && m.d == 0) {
    throw DegenerateRow("matrix row (c, d) must be nonzero");
  }
  const Int det = m.det();
  if (det == 0) {
    throw DomainError("matrix must be nonsingular");
  }
  // With x = (P + sqrt(D))/Q, rationalizing (a x + b)/(c x + d) gives
  //   y = (R + S sqrt(D)) / T,
  //   R = (aP + bQ)(cP + dQ) - a c D,  S = det(M) Q,  T = (cP + dQ)^2 - c^2 D.
  const Int& p = x.p();
  const Int& qq = x.q();
  const Int& dd = x.d();
  const Int num = m.a * p + m.b * qq;
  const Int den = m.c * p + m.d * qq;
  Int r_part = num * den - m.a * m.c * dd;
  Int s_part = det * qq;
  Int t_part = den * den - m.c * m.c * dd;
  // T = 0 would force sqrt(D) rational; cannot happen for (c, d) != (0, 0).
  if (s_part < 0) {
    r_part = -r_part;
    t_part = -t_part;
    s_part = -s_part;
  }
  return Surd(std::move(r_part), std::move(t_part), s_part * s_part * dd);
}

}  // namespace surdeq
