#pragma once

#include <iosfwd>
#include <vector>

#include "surdeq/pell.hpp"
#include "surdeq/surd.hpp"

namespace surdeq {

/// Integer 2x2 matrix; a witness of equivalence has determinant ±1.
struct GLMatrix {
  Int a;
  Int b;
  Int c;
  Int d;

  Int det() const { return a * d - b * c; }

  bool operator==(const GLMatrix&) const = default;
};

GLMatrix operator*(const GLMatrix& lhs, const GLMatrix& rhs);
std::ostream& operator<<(std::ostream& os, const GLMatrix& m);

/// Whether m/q + sqrt(v) and n/q + sqrt(v) have continued fractions that can
/// be written with the same period. Decided as q0 | (m - n), where q0 comes
/// from unit_group_data(v, q). Requires (m, q) = (n, q) = 1; m, n are
/// reduced mod q first.
bool equivalent(const Int& v, const Int& q, const Int& m, const Int& n);

/// Whether the two numbers can be written with mutually reversed periods:
/// q0 | (m + n).
bool inverse_periods_decide(const Int& v, const Int& q, const Int& m,
                            const Int& n);

/// Whether m/q + sqrt(v) can be written with a period that is a rotation of
/// its own reversal: q0 | 2 when q is even, q0 = 1 when q is odd.
bool self_inverse_decide(const Int& v, const Int& q, const Int& m);

/// Partition of the coprime residues {m : (m, q) = 1, 0 <= m < q} into
/// equivalence classes: exactly phi(q0) classes of phi(q)/phi(q0) elements,
/// grouped by m mod q0.
struct ClassReport {
  Int v;
  Int q;
  Int q0;
  Int num_classes;
  Int class_size;
  std::vector<std::vector<Int>> classes;
};

ClassReport class_summary(const Int& v, const Int& q);

/// Explicit matrix M with |det M| = 1 and M·x = y (as a Moebius map) for
/// x = m/q + sqrt(v), y = n/q + sqrt(v). Throws NotEquivalent when the
/// decision procedure rejects the pair.
GLMatrix witness_matrix(const Int& v, const Int& q, const Int& m,
                        const Int& n);

/// Exact evaluation of (a x + b) / (c x + d) in Q[sqrt(D)], returned as a
/// normalized Surd. The matrix must be nonsingular and (c, d) != (0, 0).
Surd apply_moebius(const GLMatrix& m, const Surd& x);

}  // namespace surdeq
