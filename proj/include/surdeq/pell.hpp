#pragma once

#include <iosfwd>
#include <optional>
#include <utility>

#include "surdeq/surd.hpp"

namespace surdeq {

/// A unit r + c sqrt(v) of Z[sqrt(v)], i.e. a solution of r^2 - c^2 v = ±1.
/// Canonical representative: r, c >= 0. All gcd criteria used by the
/// decision procedures depend only on |c|, so folding signs loses nothing.
struct Unit {
  Int r;
  Int c;
  int norm;  // r^2 - c^2 v, either +1 or -1

  bool operator==(const Unit&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Unit& u);

/// Builds a Unit from |r|, |c|, recomputing and checking the norm.
Unit make_unit(const Int& r, const Int& c, const Int& v);

Unit unit_mul(const Unit& a, const Unit& b, const Int& v);

/// Exact k-th power of u in Z[sqrt(v)] by binary exponentiation, k >= 1.
Unit unit_pow(const Unit& u, const Int& v, unsigned long k);

/// (r, c) of u^k reduced mod `modulus`, via square-and-multiply in the
/// quotient ring. Avoids materializing huge exact powers.
std::pair<Int, Int> unit_pow(const Unit& u, const Int& v, unsigned long k,
                             const Int& modulus);

/// Smallest unit s + t sqrt(v) with s, t >= 1, read off the convergent at
/// the end of the first period of the continued fraction of sqrt(v).
Unit fundamental_unit(const Int& v);

/// Unit-group invariants of the pair (v, q).
///
/// k0 is the least k >= 1 such that q divides the sqrt(v)-coefficient of
/// (s + t sqrt(v))^k; (r0_mod, c0_mod) is that power reduced mod q^2; and
/// q0 = gcd(c0, q^2) / q is the smallest divisor of q realizable as
/// gcd(c, q^2) / q over all Pell solutions (r, c) — the invariant that
/// governs the whole equivalence structure.
struct UnitGroupData {
  Int v;
  Int q;
  Int s;
  Int t;
  unsigned long k0;
  Int r0_mod;
  Int c0_mod;
  Int q0;
};

/// Computes (and memoizes per (v, q)) the unit-group data. The k0 scan runs
/// modulo q and is bounded; the default bound 4 q^2 exceeds the order of the
/// unit group of Z[sqrt(v)]/q, so ScanBoundExceeded cannot fire unless a
/// smaller bound is forced.
UnitGroupData unit_group_data(const Int& v, const Int& q,
                              unsigned long scan_bound = 0);

/// A Pell solution (r, c) with gcd(c, q^2) = q * q1 exactly, or nullopt if
/// no such solution exists (i.e. q0 does not divide q1). q1 must divide q.
/// For q1 = q the trivial solution (1, 0) is returned.
std::optional<Unit> solution_with_gcd(const Int& v, const Int& q,
                                      const Int& q1);

}  // namespace surdeq
