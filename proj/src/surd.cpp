#include "surdeq/surd.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>

namespace surdeq {

namespace {

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Truncated square root; equals floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n) { return sqrt(n); }

bool is_rotation(const std::vector<Int>& p1, const std::vector<Int>& p2) {
  if (p1.size() != p2.size()) return false;
  std::vector<Int> doubled(p1);
  doubled.insert(doubled.end(), p1.begin(), p1.end());
  return std::search(doubled.begin(), doubled.end(), p2.begin(), p2.end()) !=
         doubled.end();
}

// Shrinks a period to its smallest divisor-length repeating block.
void reduce_to_primitive(std::vector<Int>& period) {
  const std::size_t k = period.size();
  for (std::size_t d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < k && repeats; ++i) {
      repeats = period[i] == period[i - d];
    }
    if (repeats) {
      period.resize(d);
      return;
    }
  }
}

}  // namespace

Surd::Surd(Int p, Int q, Int d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ == 0) throw ZeroDenominator("denominator Q must be nonzero");
  if (d_ <= 0) throw DomainError("radicand D must be positive");
  if (is_perfect_square(d_)) {
    throw PerfectSquareRadicand("radicand D must not be a perfect square");
  }
  if ((d_ - p_ * p_) % q_ != 0) {
    const Int aq = abs(q_);
    p_ *= aq;
    d_ *= q_ * q_;
    q_ *= aq;
  }
}

bool Surd::operator==(const Surd& other) const {
  if (sgn(q_) != sgn(other.q_)) return false;
  if (p_ * other.q_ != other.p_ * q_) return false;
  return d_ * other.q_ * other.q_ == other.d_ * q_ * q_;
}

std::ostream& operator<<(std::ostream& os, const Surd& x) {
  return os << "(" << x.p() << " + sqrt(" << x.d() << ")) / " << x.q();
}

Surd make_surd(const Int& m, const Int& q, const Int& v) {
  if (q == 0) throw ZeroDenominator("q must be nonzero");
  if (q < 0) throw DomainError("q must be positive");
  if (v <= 0) throw DomainError("v must be a positive integer");
  if (is_perfect_square(v)) {
    throw PerfectSquareRadicand("v must not be a perfect square");
  }
  return Surd(m, q, q * q * v);
}

Int floor_of(const Surd& x) {
  const Int s = isqrt(x.d());
  if (x.q() > 0) return floor_div(x.p() + s, x.q());
  // (P + sqrt(D))/Q = -(P + sqrt(D))/|Q| is irrational, so
  // floor(-z) = -floor(z) - 1.
  return -floor_div(x.p() + s, -x.q()) - 1;
}

std::pair<Int, Surd> cf_step(const Surd& x) {
  Int a = floor_of(x);
  Int p_next = a * x.q() - x.p();
  // Exact: p_next == -P mod Q, so Q | D - p_next^2.
  Int q_next = (x.d() - p_next * p_next) / x.q();
  return {std::move(a), Surd(std::move(p_next), std::move(q_next), x.d())};
}

CFExpansion expand(const Surd& x) {
  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> quotients;
  Surd state = x;
  for (std::size_t i = 0;; ++i) {
    auto [it, inserted] = seen.emplace(std::make_pair(state.p(), state.q()), i);
    if (!inserted) {
      // First repeated state: everything before its first occurrence is the
      // pre-period, the rest is one full cycle.
      const std::size_t start = it->second;
      CFExpansion out;
      out.preperiod.assign(quotients.begin(),
                           quotients.begin() + static_cast<long>(start));
      out.period.assign(quotients.begin() + static_cast<long>(start),
                        quotients.end());
      reduce_to_primitive(out.period);
      return out;
    }
    auto [a, next] = cf_step(state);
    quotients.push_back(std::move(a));
    state = next;
  }
}

Int discriminant(const Surd& x) {
  // Minimal polynomial of x: Q^2 t^2 - 2PQ t + (P^2 - D), made primitive.
  const Int a = x.q() * x.q();
  const Int b = -2 * x.p() * x.q();
  const Int c = x.p() * x.p() - x.d();
  const Int g = gcd(gcd(a, b), c);
  return (b * b - 4 * a * c) / (g * g);
}

std::ostream& operator<<(std::ostream& os, PeriodRelation rel) {
  switch (rel) {
    case PeriodRelation::EqualRotation:
      return os << "EqualRotation";
    case PeriodRelation::InverseRotation:
      return os << "InverseRotation";
    case PeriodRelation::Both:
      return os << "Both";
    case PeriodRelation::None:
      return os << "None";
  }
  return os;
}

PeriodRelation period_relation(const std::vector<Int>& p1,
                               const std::vector<Int>& p2) {
  if (p1.empty() || p2.empty()) {
    throw EmptyPeriod("periods must be nonempty");
  }
  const bool equal = is_rotation(p1, p2);
  std::vector<Int> reversed(p1.rbegin(), p1.rend());
  const bool inverse = is_rotation(reversed, p2);
  if (equal && inverse) return PeriodRelation::Both;
  if (equal) return PeriodRelation::EqualRotation;
  if (inverse) return PeriodRelation::InverseRotation;
  return PeriodRelation::None;
}

}  // namespace surdeq
