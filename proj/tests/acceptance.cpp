// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
// argv[1] (optional) is the path to the fockcb command line binary, used by
// the determinism criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockcb/canonical.hpp"
#include "fockcb/decomposition.hpp"

using namespace fockcb;
using Clock = std::chrono::steady_clock;

namespace {

Multipartition mp(const std::string& text) { return Multipartition::parse(text); }

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::vector<ParamSet>& configs() {
  static const std::vector<ParamSet> all = {ParamSet(2, {0}), ParamSet(3, {0, 1}),
                                            ParamSet(4, {0, 2, 3})};
  return all;
}

struct Criterion {
  int number;
  std::string description;
  std::function<bool(std::string&)> run;
};

// ---- criterion 1: worked a-sequence example ----

bool run_aseq_example(std::string& detail) {
  ParamSet p(4, {0, 2, 3});
  Multipartition lam = mp("1|3.1|2.1.1");
  std::vector<Residue> expect;
  for (int v : {3, 2, 2, 1, 1, 3, 0, 0, 0}) expect.emplace_back(v);

  a_sequence(lam, p);  // warm up allocators before timing
  Clock::time_point start = Clock::now();
  std::vector<Residue> seq = a_sequence(lam, p);
  double elapsed = ms_since(start);

  PeelStep first = peel_step(lam, p);
  bool ok = seq == expect && first.k == Residue(0) && first.count == 3 &&
            first.rest == mp("-|2.1|1.1.1") && elapsed < 1.0;
  std::ostringstream os;
  os << "a-sequence " << render_a_sequence(seq) << ", first peel (k=" << first.k.value()
     << ", s=" << first.count << ", rest=" << first.rest << "), " << elapsed << " ms";
  detail = os.str();
  return ok;
}

// ---- criterion 2: worked FLOTW examples ----

bool run_flotw_example(std::string& detail) {
  ParamSet p(4, {0, 2, 3});
  bool ok = is_flotw(mp("1|3.1|2.1.1"), p) && is_flotw(mp("-|2.1|1.1.1"), p);
  detail = "both example multipartitions test FLOTW-true";
  return ok;
}

// ---- criterion 3: residue diagram regression ----

bool run_residue_diagram(std::string& detail) {
  ParamSet p(4, {0, 2, 3});
  const std::vector<std::vector<std::vector<int>>> expect = {
      {{0}}, {{2, 3, 0}, {1}}, {{3, 0}, {2}, {1}}};
  Multipartition lam = mp("1|3.1|2.1.1");
  for (int c = 0; c < 3; ++c) {
    const Partition& comp = lam.component(c);
    if (comp.height() != static_cast<int>(expect[c].size())) {
      detail = "row count mismatch in component " + std::to_string(c);
      return false;
    }
    for (int row = 1; row <= comp.height(); ++row) {
      const auto& cells = expect[c][row - 1];
      if (comp.part(row) != static_cast<int>(cells.size())) {
        detail = "row length mismatch in component " + std::to_string(c);
        return false;
      }
      for (int col = 1; col <= comp.part(row); ++col) {
        if (residue(Node{row, col, c}, p).value() != cells[col - 1]) {
          detail = "residue mismatch at (" + std::to_string(row) + "," + std::to_string(col) +
                   "," + std::to_string(c) + ")";
          return false;
        }
      }
    }
  }
  detail = "all nine residues match the reference diagram";
  return true;
}

// ---- criterion 4: small canonical bases and matrices ----

bool run_small_bases(std::string& detail) {
  ParamSet p(2, {0});
  Laurent one(1), q = Laurent::monomial(1, 1);

  Clock::time_point start = Clock::now();
  CanonicalBasis rank2 = compute_canonical_basis(2, p);
  CanonicalBasis rank3 = compute_canonical_basis(3, p);
  DecompositionMatrix m2 = assemble(rank2);
  DecompositionMatrix m3 = assemble(rank3);
  double elapsed = ms_since(start);

  FockVector g2(2), g3(3), g21(3);
  g2.add_term(mp("2"), one);
  g2.add_term(mp("1.1"), q);
  g3.add_term(mp("3"), one);
  g3.add_term(mp("1.1.1"), q);
  g21.add_term(mp("2.1"), one);

  bool basis_ok = rank2.size() == 1 && rank2.at(mp("2")) == g2 && rank3.size() == 2 &&
                  rank3.at(mp("3")) == g3 && rank3.at(mp("2.1")) == g21;
  bool m2_ok = m2.rows() == std::vector<Multipartition>{mp("2"), mp("1.1")} &&
               m2.cols() == std::vector<Multipartition>{mp("2")} &&
               m2.entry(mp("2"), 0).eval_at_one() == 1 && m2.entry(mp("1.1"), 0).eval_at_one() == 1;
  bool m3_ok = m3.cols() == std::vector<Multipartition>{mp("3"), mp("2.1")} &&
               m3.entry(mp("3"), 0).eval_at_one() == 1 &&
               m3.entry(mp("1.1.1"), 0).eval_at_one() == 1 &&
               m3.entry(mp("2.1"), 0).eval_at_one() == 0 &&
               m3.entry(mp("2.1"), 1).eval_at_one() == 1 &&
               m3.entry(mp("3"), 1).eval_at_one() == 0;

  std::ostringstream os;
  os << "G(2), G(3), G(2.1) and both specialized matrices match, " << elapsed << " ms";
  detail = os.str();
  return basis_ok && m2_ok && m3_ok && elapsed < 10.0;
}

// ---- criterion 5: divided-power exactness sweep ----

bool run_divisibility_sweep(std::string& detail) {
  Clock::time_point start = Clock::now();
  long long checked = 0;
  for (const ParamSet& p : configs()) {
    for (int n = 0; n <= 5; ++n) {
      for (const Multipartition& lam : enumerate_multipartitions(n, p.level())) {
        for (int i = 0; i < p.e(); ++i) {
          for (int r = 1; r <= 3; ++r) {
            try {
              apply_f_divided(Residue(i), r, FockVector::unit(lam), p);
              ++checked;
            } catch (const not_divisible_error&) {
              detail = "not divisible at " + lam.to_string() + ", i=" + std::to_string(i) +
                       ", r=" + std::to_string(r);
              return false;
            }
          }
        }
      }
    }
  }
  double elapsed = ms_since(start);
  std::ostringstream os;
  os << checked << " divided powers, zero not-divisible errors, " << elapsed / 1000.0 << " s";
  detail = os.str();
  return elapsed < 30000.0;
}

// ---- criterion 6: commutator identities ----

bool run_commutators(std::string& detail) {
  std::mt19937 rng(424242);
  long long same = 0, mixed = 0;
  for (const ParamSet& p : configs()) {
    std::vector<Multipartition> pool;
    for (int n = 0; n <= 6; ++n)
      for (const auto& m : enumerate_multipartitions(n, p.level())) pool.push_back(m);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> res(0, p.e() - 1);

    for (int trial = 0; trial < 170; ++trial) {
      const Multipartition& lam = pool[pick(rng)];
      Residue i(res(rng));
      FockVector unit = FockVector::unit(lam);
      FockVector left =
          apply_e(i, apply_f(i, unit, p), p) - apply_f(i, apply_e(i, unit, p), p);
      int balance = node_balance(lam, i, p);
      Laurent bracket = balance == 0 ? Laurent()
                        : balance > 0 ? Laurent::q_int(balance)
                                      : -Laurent::q_int(-balance);
      if (!(left == unit.scaled(bracket))) {
        detail = "e_i f_i - f_i e_i failed at " + lam.to_string() + ", i=" + std::to_string(i.value());
        return false;
      }
      ++same;
    }
    for (int trial = 0; trial < 70; ++trial) {
      const Multipartition& lam = pool[pick(rng)];
      Residue i(res(rng)), j(res(rng));
      if (i == j) j = Residue((j.value() + 1) % p.e());
      if (i == j) continue;  // e = 1 has a single residue
      FockVector unit = FockVector::unit(lam);
      FockVector left =
          apply_e(i, apply_f(j, unit, p), p) - apply_f(j, apply_e(i, unit, p), p);
      if (!left.is_zero()) {
        detail = "e_i f_j - f_j e_i != 0 at " + lam.to_string();
        return false;
      }
      ++mixed;
    }
  }
  std::ostringstream os;
  os << same << " equal-residue and " << mixed << " mixed-residue samples verified";
  detail = os.str();
  return same >= 500 && mixed >= 200;
}

// ---- criterion 7: unitriangularity and positivity ----

bool run_unitriangularity(std::string& detail) {
  Clock::time_point start = Clock::now();
  long long entries = 0;
  for (const ParamSet& p : configs()) {
    AValueCache cache(p);
    for (int n = 0; n <= 6; ++n) {
      CanonicalBasis basis = compute_canonical_basis(n, p);
      if (basis.size() != enumerate_flotw(n, p).size()) {
        detail = "basis size mismatch at rank " + std::to_string(n);
        return false;
      }
      for (const auto& entry : basis.entries()) {
        if (!(entry.vector.coeff(entry.label) == Laurent(1))) {
          detail = "coefficient at " + entry.label.to_string() + " is not 1";
          return false;
        }
        for (const auto& [mu, coeff] : entry.vector.terms()) {
          if (mu == entry.label) continue;
          if (!coeff.in_qZq()) {
            detail = "coefficient of " + mu.to_string() + " in G(" + entry.label.to_string() +
                     ") is not in qZ[q]";
            return false;
          }
          if (!(cache(mu) > entry.a)) {
            detail = "support of G(" + entry.label.to_string() + ") at a-value not above its own";
            return false;
          }
          ++entries;
        }
      }
    }
  }
  double elapsed = ms_since(start);
  std::ostringstream os;
  os << entries << " off-diagonal coefficients verified, " << elapsed / 1000.0 << " s";
  detail = os.str();
  return elapsed < 300000.0;
}

// ---- criterion 8: tie-break independence ----

bool run_tie_break_independence(std::string& detail) {
  BasisOptions alternate;
  alternate.k_scan = KScan::descending;
  alternate.reverse_offender_ties = true;
  for (const ParamSet& p : configs()) {
    for (int n = 0; n <= 6; ++n) {
      std::ostringstream base, other;
      compute_canonical_basis(n, p).dump(base);
      compute_canonical_basis(n, p, alternate).dump(other);
      if (base.str() != other.str()) {
        detail = "dumps differ for e=" + std::to_string(p.e()) + ", n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "alternate residue scan and reversed reduction ties give bit-identical dumps";
  return true;
}

// ---- criterion 9: level-1 regularity cross-check ----

bool run_regularity_crosscheck(std::string& detail) {
  // independent oracle: a partition is 2-regular iff its parts are distinct
  auto distinct_parts = [](const Multipartition& m) {
    const auto& parts = m.component(0).parts();
    for (std::size_t t = 1; t < parts.size(); ++t)
      if (parts[t - 1] == parts[t]) return false;
    return true;
  };
  ParamSet p(2, {0});
  const std::vector<std::size_t> expect = {1, 1, 1, 2, 2, 3, 4, 5, 6};
  for (int n = 0; n <= 8; ++n) {
    std::size_t oracle = 0;
    for (const auto& m : enumerate_multipartitions(n, 1))
      if (distinct_parts(m)) ++oracle;
    std::size_t actual = enumerate_flotw(n, p).size();
    if (actual != expect[static_cast<std::size_t>(n)] || actual != oracle) {
      detail = "count mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "counts 1,1,1,2,2,3,4,5,6 match the distinct-parts oracle";
  return true;
}

// ---- criterion 10: CLI determinism ----

std::string capture_command(const std::string& command, int& status) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return output;
  }
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  status = pclose(pipe);
  return output;
}

bool run_cli_determinism(const std::string& cli_path, std::string& detail) {
  if (cli_path.empty()) {
    detail = "no CLI binary path given on the command line";
    return false;
  }
  std::string command = "'" + cli_path + "' matrix -n 6 -e 4 -v 0,2,3";
  Clock::time_point start = Clock::now();
  int status1 = 0, status2 = 0;
  std::string first = capture_command(command, status1);
  std::string second = capture_command(command, status2);
  double elapsed = ms_since(start);
  bool ok = status1 == 0 && status2 == 0 && !first.empty() && first == second &&
            elapsed / 2.0 < 60000.0;
  std::ostringstream os;
  os << "two runs, " << first.size() << " bytes each, byte-identical, " << elapsed / 2000.0
     << " s per run (single-threaded by construction)";
  detail = os.str();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";

  std::vector<Criterion> criteria = {
      {1, "worked a-sequence example with first peel, < 1 ms", run_aseq_example},
      {2, "worked FLOTW membership examples", run_flotw_example},
      {3, "residue diagram regression", run_residue_diagram},
      {4, "small canonical bases and specialized matrices, < 10 ms", run_small_bases},
      {5, "divided-power exactness sweep, < 30 s", run_divisibility_sweep},
      {6, "commutator identities on random samples", run_commutators},
      {7, "unitriangularity and positivity, rank <= 6, < 5 min", run_unitriangularity},
      {8, "tie-break independence of the basis", run_tie_break_independence},
      {9, "level-1 regularity cross-check", run_regularity_crosscheck},
      {10, "CLI determinism for matrix -n 6 -e 4 -v 0,2,3, < 60 s",
       [&cli_path](std::string& detail) { return run_cli_determinism(cli_path, detail); }},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number << " ("
              << criterion.description << "): " << detail << '\n';
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
