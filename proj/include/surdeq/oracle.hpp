#pragma once

#include <map>

#include "surdeq/equiv.hpp"
#include "surdeq/pell.hpp"
#include "surdeq/surd.hpp"

namespace surdeq {

/// Brute-force equivalence: expand both numbers and compare primitive
/// periods up to rotation. Shares nothing with the Pell-based decision
/// beyond the expansion engine itself.
bool oracle_equivalent(const Surd& x, const Surd& y);

/// Relation of the primitive periods of x and y.
PeriodRelation oracle_period_relation(const Surd& x, const Surd& y);

/// Enumerates exact powers (s + t sqrt(v))^k, k = 1..max_power, of the
/// fundamental unit and records, for each achieved q1 = gcd(c_k, q^2)/q
/// with q | c_k, the smallest exponent k achieving it. The trivial solution
/// (1, 0) contributes q1 = q with exponent 0 when no scanned power achieved
/// it first. Absence of a q1 means "not found within the bound", never
/// "nonexistent".
std::map<Int, unsigned long> oracle_unit_scan(const Int& v, const Int& q,
                                              unsigned long max_power);

/// Serret check: |det M| = 1 and M·x = y exactly.
bool verify_matrix(const GLMatrix& m, const Surd& x, const Surd& y);

}  // namespace surdeq
