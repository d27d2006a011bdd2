#include "surdeq/oracle.hpp"

namespace surdeq {

bool oracle_equivalent(const Surd& x, const Surd& y) {
  const PeriodRelation rel = oracle_period_relation(x, y);
  return rel == PeriodRelation::EqualRotation || rel == PeriodRelation::Both;
}

PeriodRelation oracle_period_relation(const Surd& x, const Surd& y) {
  return period_relation(expand(x).period, expand(y).period);
}

std::map<Int, unsigned long> oracle_unit_scan(const Int& v, const Int& q,
                                              unsigned long max_power) {
  if (q < 1) throw DomainError("q must be a positive integer");
  const Unit fu = fundamental_unit(v);
  const Int q2 = q * q;
  std::map<Int, unsigned long> achieved;
  Unit u = make_unit(1, 0, v);
  for (unsigned long k = 1; k <= max_power; ++k) {
    u = unit_mul(u, fu, v);
    if (u.c % q == 0) {
      achieved.emplace(gcd(u.c, q2) / q, k);  // keeps the smallest k
    }
  }
  achieved.emplace(q, 0UL);  // trivial solution (1, 0)
  return achieved;
}

bool verify_matrix(const GLMatrix& m, const Surd& x, const Surd& y) {
  const Int det = m.det();
  if (det != 1 && det != -1) return false;
  return apply_moebius(m, x) == y;
}

}  // namespace surdeq
