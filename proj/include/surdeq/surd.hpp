#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <vector>

#include "surdeq/errors.hpp"

namespace surdeq {

using Int = mpz_class;

/// Exact quadratic irrational (P + sqrt(D)) / Q.
///
/// Invariants: D > 0 and not a perfect square, Q != 0, and Q | D - P^2.
/// The last one keeps the continued-fraction recurrence integral; the
/// constructor establishes it by scaling (P, Q, D) <- (P|Q|, Q|Q|, D Q^2)
/// when necessary, which leaves the value unchanged.
class Surd {
 public:
  Surd(Int p, Int q, Int d);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& d() const { return d_; }

  /// Value equality in R, independent of representation: compares the
  /// rational parts P/Q and the irrational parts sqrt(D)/Q exactly.
  bool operator==(const Surd& other) const;

 private:
  Int p_;
  Int q_;
  Int d_;
};

std::ostream& operator<<(std::ostream& os, const Surd& x);

/// m/q + sqrt(v) as a normalized Surd, i.e. (m + sqrt(q^2 v)) / q.
/// m may be negative or >= q; decision procedures reduce mod q themselves.
Surd make_surd(const Int& m, const Int& q, const Int& v);

/// floor((P + sqrt(D)) / Q), exact for both signs of Q.
Int floor_of(const Surd& x);

/// One continued-fraction step: a = floor(x), next = 1/(x - a).
/// The next surd shares x's radicand D and is normalized.
std::pair<Int, Surd> cf_step(const Surd& x);

/// Eventually periodic continued fraction: minimal pre-period followed by
/// the primitive period.
struct CFExpansion {
  std::vector<Int> preperiod;
  std::vector<Int> period;

  bool operator==(const CFExpansion&) const = default;
};

/// Expands x by iterating cf_step until the first repeated (P, Q) state.
CFExpansion expand(const Surd& x);

/// Discriminant b^2 - 4ac of the primitive integral polynomial with root x.
/// For x = m/q + sqrt(v), (m, q) = 1, this equals 4 q^4 v.
Int discriminant(const Surd& x);

enum class PeriodRelation {
  EqualRotation,    // p2 is a cyclic rotation of p1
  InverseRotation,  // p2 is a cyclic rotation of the reversal of p1
  Both,
  None,
};

std::ostream& operator<<(std::ostream& os, PeriodRelation rel);

/// Compares two primitive periods up to rotation and reversal.
PeriodRelation period_relation(const std::vector<Int>& p1,
                               const std::vector<Int>& p2);

}  // namespace surdeq
