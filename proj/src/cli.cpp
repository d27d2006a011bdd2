#include "surdeq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "surdeq/equiv.hpp"
#include "surdeq/oracle.hpp"
#include "surdeq/pell.hpp"
#include "surdeq/surd.hpp"

namespace surdeq {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const std::string& flag) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("value for " + flag + " is not an integer: '" + text +
                     "'");
  }
}

std::string dec(const Int& n) { return n.get_str(); }

std::string dec(unsigned long n) { return std::to_string(n); }

std::string dec_pair(const Int& v, const Int& q, const Int& m, const Int& n) {
  return dec(v) + " q=" + dec(q) + " m=" + dec(m) + " n=" + dec(n);
}

std::string bracketed(const std::vector<Int>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) os << ", ";
    os << xs[i];
  }
  os << "]";
  return os.str();
}

json string_list(const std::vector<Int>& xs) {
  json arr = json::array();
  for (const Int& x : xs) arr.push_back(dec(x));
  return arr;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string surd_label(const Int& m, const Int& q, const Int& v) {
  return dec(m) + "/" + dec(q) + " + sqrt(" + dec(v) + ")";
}

void emit(std::ostream& out, const json& record) {
  out << record.dump(2) << "\n";
}

// Echoes reduced residues into both output flavours.
void note_reduction(std::ostream& out, bool want_json, json& inputs,
                    const char* name, const Int& given, const Int& q) {
  const Int reduced = mod_nonneg(given, q);
  if (want_json) {
    inputs[std::string(name) + "_reduced"] = dec(reduced);
  } else if (reduced != given) {
    out << name << " reduced to " << reduced << " (mod " << q << ")\n";
  }
}

int cmd_expand(const Int& v, const Int& q, const Int& m, bool want_json,
               std::ostream& out) {
  const CFExpansion e = expand(make_surd(m, q, v));
  if (want_json) {
    json record;
    record["command"] = "expand";
    record["inputs"] = {{"v", dec(v)}, {"q", dec(q)}, {"m", dec(m)}};
    record["result"] = {{"preperiod", string_list(e.preperiod)},
                        {"period", string_list(e.period)},
                        {"period_length", dec(Int(static_cast<unsigned long>(
                                              e.period.size())))}};
    emit(out, record);
  } else {
    out << "x = " << surd_label(m, q, v) << "\n";
    out << "pre-period:    " << bracketed(e.preperiod) << "\n";
    out << "period:        " << bracketed(e.period) << "\n";
    out << "period length: " << e.period.size() << "\n";
  }
  return 0;
}

int cmd_equiv(const Int& v, const Int& q, const Int& m, const Int& n,
              bool want_json, std::ostream& out) {
  const bool result = equivalent(v, q, m, n);
  const UnitGroupData data = unit_group_data(v, q);
  const Int q1 = gcd(m - n, q);
  if (want_json) {
    json record;
    record["command"] = "equiv";
    json inputs = {{"v", dec(v)}, {"q", dec(q)}, {"m", dec(m)}, {"n", dec(n)}};
    note_reduction(out, true, inputs, "m", m, q);
    note_reduction(out, true, inputs, "n", n, q);
    record["inputs"] = inputs;
    record["result"] = {
        {"equivalent", result}, {"q0", dec(data.q0)}, {"q1", dec(q1)}};
    emit(out, record);
  } else {
    json unused;
    note_reduction(out, false, unused, "m", m, q);
    note_reduction(out, false, unused, "n", n, q);
    out << "x = " << surd_label(m, q, v) << ", y = " << surd_label(n, q, v)
        << "\n";
    out << "q0 = " << data.q0 << ", q1 = gcd(m - n, q) = " << q1 << "\n";
    out << "equivalent: " << (result ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_inverse(const Int& v, const Int& q, const Int& m, const Int& n,
                bool want_json, std::ostream& out) {
  const bool result = inverse_periods_decide(v, q, m, n);
  const UnitGroupData data = unit_group_data(v, q);
  const Int q1p = gcd(m + n, q);
  if (want_json) {
    json record;
    record["command"] = "inverse";
    json inputs = {{"v", dec(v)}, {"q", dec(q)}, {"m", dec(m)}, {"n", dec(n)}};
    note_reduction(out, true, inputs, "m", m, q);
    note_reduction(out, true, inputs, "n", n, q);
    record["inputs"] = inputs;
    record["result"] = {{"inverse_periods", result},
                        {"q0", dec(data.q0)},
                        {"q1_prime", dec(q1p)}};
    emit(out, record);
  } else {
    json unused;
    note_reduction(out, false, unused, "m", m, q);
    note_reduction(out, false, unused, "n", n, q);
    out << "x = " << surd_label(m, q, v) << ", y = " << surd_label(n, q, v)
        << "\n";
    out << "q0 = " << data.q0 << ", q1' = gcd(m + n, q) = " << q1p << "\n";
    out << "inverse periods: " << (result ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_selfinv(const Int& v, const Int& q, const Int& m, bool want_json,
                std::ostream& out) {
  const bool result = self_inverse_decide(v, q, m);
  const UnitGroupData data = unit_group_data(v, q);
  const Int q1p = (q % 2 == 0) ? 2 : 1;
  if (want_json) {
    json record;
    record["command"] = "selfinv";
    json inputs = {{"v", dec(v)}, {"q", dec(q)}, {"m", dec(m)}};
    note_reduction(out, true, inputs, "m", m, q);
    record["inputs"] = inputs;
    record["result"] = {{"self_inverse", result},
                        {"q0", dec(data.q0)},
                        {"q1_prime", dec(q1p)}};
    emit(out, record);
  } else {
    json unused;
    note_reduction(out, false, unused, "m", m, q);
    out << "x = " << surd_label(m, q, v) << "\n";
    out << "q0 = " << data.q0 << ", q1' = " << q1p << " (q "
        << (q % 2 == 0 ? "even" : "odd") << ")\n";
    out << "self-inverse period: " << (result ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_classes(const Int& v, const Int& q, bool want_json,
                std::ostream& out) {
  const ClassReport report = class_summary(v, q);
  std::vector<Int> period_lengths;
  for (const auto& members : report.classes) {
    const CFExpansion e = expand(make_surd(members.front(), q, v));
    period_lengths.push_back(Int(static_cast<unsigned long>(e.period.size())));
  }
  if (want_json) {
    json record;
    record["command"] = "classes";
    record["inputs"] = {{"v", dec(v)}, {"q", dec(q)}};
    json classes = json::array();
    for (const auto& members : report.classes) {
      classes.push_back(string_list(members));
    }
    record["result"] = {{"q0", dec(report.q0)},
                        {"num_classes", dec(report.num_classes)},
                        {"class_size", dec(report.class_size)},
                        {"classes", classes},
                        {"period_lengths", string_list(period_lengths)}};
    emit(out, record);
  } else {
    out << "v = " << v << ", q = " << q << ": q0 = " << report.q0 << "\n";
    out << report.num_classes << " equivalence class(es), "
        << report.class_size << " element(s) each\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
      out << "class " << (i + 1) << ": m in " << bracketed(report.classes[i])
          << "   period length " << period_lengths[i] << "\n";
    }
  }
  return 0;
}

int cmd_matrix(const Int& v, const Int& q, const Int& m, const Int& n,
               bool want_json, std::ostream& out) {
  const GLMatrix matrix = witness_matrix(v, q, m, n);
  const bool verified =
      verify_matrix(matrix, make_surd(m, q, v), make_surd(n, q, v));
  if (want_json) {
    json record;
    record["command"] = "matrix";
    json inputs = {{"v", dec(v)}, {"q", dec(q)}, {"m", dec(m)}, {"n", dec(n)}};
    note_reduction(out, true, inputs, "m", m, q);
    note_reduction(out, true, inputs, "n", n, q);
    record["inputs"] = inputs;
    record["result"] = {{"a", dec(matrix.a)},     {"b", dec(matrix.b)},
                        {"c", dec(matrix.c)},     {"d", dec(matrix.d)},
                        {"det", dec(matrix.det())}, {"verified", verified}};
    emit(out, record);
  } else {
    out << "x = " << surd_label(m, q, v) << ", y = " << surd_label(n, q, v)
        << "\n";
    out << "a = " << matrix.a << ", b = " << matrix.b << "\n";
    out << "c = " << matrix.c << ", d = " << matrix.d << "\n";
    out << "det = " << matrix.det() << "\n";
    out << "maps x to y: " << (verified ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_unitdata(const Int& v, const Int& q, bool want_json,
                 std::ostream& out) {
  const UnitGroupData data = unit_group_data(v, q);
  const Unit fu = make_unit(data.s, data.t, v);
  if (want_json) {
    json record;
    record["command"] = "unitdata";
    record["inputs"] = {{"v", dec(v)}, {"q", dec(q)}};
    record["result"] = {{"s", dec(data.s)},
                        {"t", dec(data.t)},
                        {"norm", dec(Int(fu.norm))},
                        {"k0", dec(data.k0)},
                        {"r0_mod", dec(data.r0_mod)},
                        {"c0_mod", dec(data.c0_mod)},
                        {"q0", dec(data.q0)}};
    emit(out, record);
  } else {
    out << "v = " << v << ", q = " << q << "\n";
    out << "fundamental unit: s = " << data.s << ", t = " << data.t
        << ", norm = " << (fu.norm > 0 ? "+1" : "-1") << "\n";
    out << "k0 = " << data.k0 << "\n";
    out << "(r0, c0) mod q^2 = (" << data.r0_mod << ", " << data.c0_mod
        << ")\n";
    out << "q0 = " << data.q0 << "\n";
  }
  return 0;
}

struct CheckStats {
  unsigned long checks = 0;
  std::vector<std::string> disagreements;

  void record(bool agree, const std::string& what) {
    ++checks;
    if (!agree) disagreements.push_back(what);
  }
};

void check_pair(const Int& v, const Int& q, const Int& m, const Int& n,
                CheckStats& stats) {
  const Surd x = make_surd(m, q, v);
  const Surd y = make_surd(n, q, v);
  const bool dec = equivalent(v, q, m, n);
  stats.record(dec == oracle_equivalent(x, y),
               "equiv v=" + dec_pair(v, q, m, n));
  const PeriodRelation rel = oracle_period_relation(x, y);
  const bool inv_oracle =
      rel == PeriodRelation::InverseRotation || rel == PeriodRelation::Both;
  stats.record(inverse_periods_decide(v, q, m, n) == inv_oracle,
               "inverse v=" + dec_pair(v, q, m, n));
  if (dec) {
    const GLMatrix matrix = witness_matrix(v, q, m, n);
    stats.record(verify_matrix(matrix, x, y),
                 "witness v=" + dec_pair(v, q, m, n));
  }
}

void check_self(const Int& v, const Int& q, const Int& m, CheckStats& stats) {
  const Surd x = make_surd(m, q, v);
  const PeriodRelation rel = oracle_period_relation(x, x);
  const bool self_oracle =
      rel == PeriodRelation::InverseRotation || rel == PeriodRelation::Both;
  stats.record(self_inverse_decide(v, q, m) == self_oracle,
               "selfinv v=" + dec(v) + " q=" + dec(q) + " m=" + dec(m));
}

void check_cell(const Int& v, const Int& q, unsigned long max_power,
                CheckStats& stats) {
  std::vector<Int> residues;
  for (Int m = 0; m < q; ++m) {
    if (gcd(m, q) == 1) residues.push_back(m);
  }
  for (const Int& m : residues) {
    check_self(v, q, m, stats);
    for (const Int& n : residues) check_pair(v, q, m, n, stats);
  }

  // Class partition vs. the partition induced by period rotation.
  const ClassReport report = class_summary(v, q);
  std::vector<std::vector<Int>> oracle_classes;
  std::vector<CFExpansion> reps;
  for (const Int& m : residues) {
    const CFExpansion e = expand(make_surd(m, q, v));
    bool placed = false;
    for (std::size_t i = 0; i < oracle_classes.size() && !placed; ++i) {
      const PeriodRelation rel = period_relation(reps[i].period, e.period);
      if (rel == PeriodRelation::EqualRotation || rel == PeriodRelation::Both) {
        oracle_classes[i].push_back(m);
        placed = true;
      }
    }
    if (!placed) {
      oracle_classes.push_back({m});
      reps.push_back(e);
    }
  }
  auto as_set = [](const std::vector<std::vector<Int>>& classes) {
    std::set<std::vector<Int>> s;
    for (auto cls : classes) {
      std::sort(cls.begin(), cls.end());
      s.insert(cls);
    }
    return s;
  };
  stats.record(as_set(report.classes) == as_set(oracle_classes),
               "class partition v=" + dec(v) + " q=" + dec(q));

  // Achievable gcd values from the unit scan vs. {q1 : q0 | q1 | q}.
  const UnitGroupData data = unit_group_data(v, q);
  unsigned long bound = max_power;
  if (bound == 0) {
    Int auto_bound = 4 * q * q;
    Int needed = Int(data.k0) * (q / data.q0) + 1;
    if (needed > auto_bound) auto_bound = needed;
    bound = auto_bound.fits_ulong_p() ? mpz_get_ui(auto_bound.get_mpz_t())
                                      : ULONG_MAX;
  }
  std::set<Int> expected;
  for (Int q1 = 1; q1 <= q; ++q1) {
    if (q % q1 == 0 && q1 % data.q0 == 0) expected.insert(q1);
  }
  std::set<Int> achieved;
  for (const auto& [q1, k] : oracle_unit_scan(v, q, bound)) {
    achieved.insert(q1);
  }
  stats.record(achieved == expected,
               "unit scan closure v=" + dec(v) + " q=" + dec(q));
  for (const Int& q1 : expected) {
    auto unit = solution_with_gcd(v, q, q1);
    stats.record(unit.has_value() && gcd(unit->c, q * q) == q * q1,
                 "solution gcd v=" + dec(v) + " q=" + dec(q) +
                     " q1=" + dec(q1));
  }
}

int cmd_oracle_check(const Int& v, const Int& q, const std::optional<Int>& m,
                     const std::optional<Int>& n, unsigned long max_power,
                     bool want_json, std::ostream& out) {
  CheckStats stats;
  if (m.has_value()) {
    check_self(v, q, *m, stats);
    check_self(v, q, *n, stats);
    check_pair(v, q, *m, *n, stats);
  } else {
    check_cell(v, q, max_power, stats);
  }
  const bool agree = stats.disagreements.empty();
  if (want_json) {
    json record;
    record["command"] = "oracle-check";
    json inputs = {{"v", dec(v)}, {"q", dec(q)}};
    if (m.has_value()) {
      inputs["m"] = dec(*m);
      inputs["n"] = dec(*n);
    }
    record["inputs"] = inputs;
    json details = json::array();
    for (const auto& line : stats.disagreements) details.push_back(line);
    record["result"] = {{"checks", dec(stats.checks)},
                        {"disagreements",
                         dec(static_cast<unsigned long>(
                             stats.disagreements.size()))},
                        {"agree", agree},
                        {"details", details}};
    emit(out, record);
  } else {
    out << "oracle-check v=" << v << " q=" << q << ": " << stats.checks
        << " checks, " << stats.disagreements.size() << " disagreement(s)\n";
    for (const auto& line : stats.disagreements) {
      out << "  DISAGREE: " << line << "\n";
    }
  }
  return agree ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Equivalence of quadratic irrationals m/q + sqrt(v): decisions via "
      "Pell units, GL(2,Z) witnesses, continued-fraction oracle."};
  app.name("surdeq");
  app.require_subcommand(1);
  app.fallthrough();  // lets the global --json trail the subcommand

  bool want_json = false;
  app.add_flag("--json", want_json, "machine-readable output");

  struct Raw {
    std::string v, q, m, n;
    unsigned long max_power = 0;
  } raw;

  auto add_vq = [&raw](CLI::App* cmd) {
    cmd->add_option("--v", raw.v, "radicand v (positive nonsquare)")
        ->required();
    cmd->add_option("--q", raw.q, "denominator q (positive)")->required();
  };

  CLI::App* expand_cmd =
      app.add_subcommand("expand", "continued fraction of m/q + sqrt(v)");
  add_vq(expand_cmd);
  expand_cmd->add_option("--m", raw.m, "numerator m")->required();

  CLI::App* equiv_cmd =
      app.add_subcommand("equiv", "decide equivalence of m/q, n/q + sqrt(v)");
  add_vq(equiv_cmd);
  equiv_cmd->add_option("--m", raw.m, "numerator m")->required();
  equiv_cmd->add_option("--n", raw.n, "numerator n")->required();

  CLI::App* inverse_cmd =
      app.add_subcommand("inverse", "decide whether periods are inverse");
  add_vq(inverse_cmd);
  inverse_cmd->add_option("--m", raw.m, "numerator m")->required();
  inverse_cmd->add_option("--n", raw.n, "numerator n")->required();

  CLI::App* selfinv_cmd =
      app.add_subcommand("selfinv", "decide whether the period is self-inverse");
  add_vq(selfinv_cmd);
  selfinv_cmd->add_option("--m", raw.m, "numerator m")->required();

  CLI::App* classes_cmd =
      app.add_subcommand("classes", "equivalence classes for fixed v, q");
  add_vq(classes_cmd);

  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "construct a GL(2,Z) witness matrix");
  add_vq(matrix_cmd);
  matrix_cmd->add_option("--m", raw.m, "numerator m")->required();
  matrix_cmd->add_option("--n", raw.n, "numerator n")->required();

  CLI::App* unitdata_cmd =
      app.add_subcommand("unitdata", "fundamental unit and q0 invariant");
  add_vq(unitdata_cmd);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check", "run decisions and brute-force oracle, compare");
  add_vq(oracle_cmd);
  CLI::Option* om = oracle_cmd->add_option("--m", raw.m, "numerator m");
  CLI::Option* on = oracle_cmd->add_option("--n", raw.n, "numerator n");
  om->needs(on);
  on->needs(om);
  oracle_cmd->add_option("--max-power", raw.max_power,
                         "override the unit-scan bound");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("surdeq");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(expand_cmd)) {
      return cmd_expand(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                        parse_int(raw.m, "--m"), want_json, out);
    }
    if (app.got_subcommand(equiv_cmd)) {
      return cmd_equiv(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                       parse_int(raw.m, "--m"), parse_int(raw.n, "--n"),
                       want_json, out);
    }
    if (app.got_subcommand(inverse_cmd)) {
      return cmd_inverse(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                         parse_int(raw.m, "--m"), parse_int(raw.n, "--n"),
                         want_json, out);
    }
    if (app.got_subcommand(selfinv_cmd)) {
      return cmd_selfinv(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                         parse_int(raw.m, "--m"), want_json, out);
    }
    if (app.got_subcommand(classes_cmd)) {
      return cmd_classes(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                         want_json, out);
    }
    if (app.got_subcommand(matrix_cmd)) {
      return cmd_matrix(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                        parse_int(raw.m, "--m"), parse_int(raw.n, "--n"),
                        want_json, out);
    }
    if (app.got_subcommand(unitdata_cmd)) {
      return cmd_unitdata(parse_int(raw.v, "--v"), parse_int(raw.q, "--q"),
                          want_json, out);
    }
    if (app.got_subcommand(oracle_cmd)) {
      std::optional<Int> m;
      std::optional<Int> n;
      if (om->count() > 0) {
        m = parse_int(raw.m, "--m");
        n = parse_int(raw.n, "--n");
      }
      return cmd_oracle_check(parse_int(raw.v, "--v"),
                              parse_int(raw.q, "--q"), m, n, raw.max_power,
                              want_json, out);
    }
    err << "usage error: no subcommand given\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace surdeq
