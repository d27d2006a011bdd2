#include "surdeq/oracle.hpp"

#include <doctest.h>

using namespace surdeq;

TEST_CASE("oracle_equivalent fixtures") {
  CHECK(oracle_equivalent(make_surd(1, 12, 7), make_surd(5, 12, 7)));
  CHECK_FALSE(oracle_equivalent(make_surd(1, 12, 979), make_surd(5, 12, 979)));
  const Surd x = make_surd(3, 7, 13);
  CHECK(oracle_equivalent(x, x));
}

TEST_CASE("oracle_period_relation fixtures") {
  const PeriodRelation r1 =
      oracle_period_relation(make_surd(7, 12, 979), make_surd(5, 12, 979));
  CHECK((r1 == PeriodRelation::InverseRotation || r1 == PeriodRelation::Both));

  const PeriodRelation r2 =
      oracle_period_relation(make_surd(11, 12, 979), make_surd(1, 12, 979));
  CHECK((r2 == PeriodRelation::InverseRotation || r2 == PeriodRelation::Both));

  CHECK(oracle_period_relation(make_surd(0, 1, 2), make_surd(0, 1, 2)) ==
        PeriodRelation::Both);
}

TEST_CASE("oracle_unit_scan fixtures") {
  const auto scan1 = oracle_unit_scan(7, 12, 8);
  REQUIRE(scan1.find(4) != scan1.end());
  CHECK(scan1.at(4) == 2);
  CHECK(scan1.find(12) != scan1.end());  // trivial solution at worst

  const auto scan2 = oracle_unit_scan(979, 12, 6);
  REQUIRE(scan2.size() == 1);
  CHECK(scan2.at(12) == 1);

  const auto scan3 = oracle_unit_scan(2, 1, 3);
  REQUIRE(scan3.size() == 1);
  CHECK(scan3.at(1) == 1);

  // Bound too small to reach any admissible power: only the trivial entry.
  const auto scan4 = oracle_unit_scan(7, 12, 1);
  REQUIRE(scan4.size() == 1);
  CHECK(scan4.at(12) == 0);
}

TEST_CASE("verify_matrix fixtures") {
  const Surd x = make_surd(1, 12, 7);
  const Surd y = make_surd(5, 12, 7);
  CHECK(verify_matrix(GLMatrix{37337, 95673, 12192, 31241}, x, y));
  CHECK(verify_matrix(GLMatrix{1, 0, 0, 1}, x, x));
  CHECK_FALSE(verify_matrix(GLMatrix{1, 0, 0, 2}, x, y));
  CHECK_FALSE(verify_matrix(GLMatrix{1, 0, 0, 2}, x, x));
  CHECK_FALSE(verify_matrix(GLMatrix{1, 1, 0, 1}, x, y));
}

TEST_CASE("oracle agrees with the decision procedures on a sample grid") {
  for (long v : {2L, 7L, 15L, 23L}) {
    for (long q : {1L, 5L, 8L, 12L}) {
      std::vector<Int> residues;
      for (long m = 0; m < q; ++m) {
        if (gcd(Int(m), Int(q)) == 1) residues.push_back(m);
      }
      std::vector<CFExpansion> expansions;
      for (const Int& m : residues) {
        expansions.push_back(expand(make_surd(m, q, v)));
      }
      for (std::size_t i = 0; i < residues.size(); ++i) {
        for (std::size_t j = 0; j < residues.size(); ++j) {
          const PeriodRelation rel =
              period_relation(expansions[i].period, expansions[j].period);
          const bool eq_oracle = rel == PeriodRelation::EqualRotation ||
                                 rel == PeriodRelation::Both;
          const bool inv_oracle = rel == PeriodRelation::InverseRotation ||
                                  rel == PeriodRelation::Both;
          CHECK(equivalent(v, q, residues[i], residues[j]) == eq_oracle);
          CHECK(inverse_periods_decide(v, q, residues[i], residues[j]) ==
                inv_oracle);
          if (eq_oracle) {
            const GLMatrix witness =
                witness_matrix(v, q, residues[i], residues[j]);
            CHECK(verify_matrix(witness, make_surd(residues[i], q, v),
                                make_surd(residues[j], q, v)));
          }
        }
      }
    }
  }
}
