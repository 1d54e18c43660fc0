#pragma once

// The fixture-backed acceptance checks, shared by `cutbetti selftest` and the
// acceptance test binary.

#include <cutbetti/cut_ideal.hpp>
#include <cutbetti/fixtures.hpp>
#include <cutbetti/formulas.hpp>
#include <cutbetti/hochster.hpp>
#include <cutbetti/simplicial.hpp>
#include <cutbetti/subgraph_count.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cutbetti {

struct SelftestOptions {
  std::filesystem::path fixture_dir;
  bool quick = false;  // skips the m = 4 full diagram
  Budget budget{};
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; 0 means no runtime bound
};

/// Randomised confluence of the normal-form rewriting: every pair-selection
/// order reaches the deterministic normal form.
inline std::size_t confluence_failures(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const int degree = std::uniform_int_distribution<int>(1, 5)(rng);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << m) - 1);
    CutMonomial mono(m);
    for (int d = 0; d < degree; ++d) mono.multiply(EdgeSubset(pick(rng), m));
    const auto reference = normal_form(mono);
    for (int r = 0; r < 3; ++r)
      if (normal_form(mono, rng) != reference) {
        ++failures;
        break;
      }
  }
  return failures;
}

namespace detail {

struct Check {
  bool ok = true;
  std::ostringstream log;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << what << "; ";
    }
  }
};

}  // namespace detail

inline constexpr int kCriterionCount = 9;

inline CriterionResult run_criterion(int id, const SelftestOptions& opt) {
  CriterionResult res{id, "", false, false, "", 0.0, 0.0};
  const auto start = std::chrono::steady_clock::now();
  detail::Check c;
  try {
    switch (id) {
      case 1: {
        res.name = "full Betti diagram m=3 equals the n=4 published diagram";
        res.time_limit = 1.0;
        const auto fx = Fixtures::load(opt.fixture_dir);
        const auto got = betti_full(3, Coefficients::rationals(), opt.budget).to_m2();
        c.expect(got == fx.table2_n4, "diagram differs:\n" + got);
        break;
      }
      case 2: {
        res.name = "full Betti diagram m=4 equals the n=5 published diagram";
        res.time_limit = 600.0;
        if (opt.quick) {
          res.skipped = true;
          res.passed = true;
          res.detail = "skipped (--quick)";
          return res;
        }
        const auto fx = Fixtures::load(opt.fixture_dir);
        const auto got = betti_full(4, Coefficients::rationals(), opt.budget).to_m2();
        c.expect(got == fx.table2_n5, "diagram differs:\n" + got);
        break;
      }
      case 3: {
        res.name = "published closed forms equal Hochster enumeration for n=2,3,4";
        res.time_limit = 300.0;
        for (unsigned n = 2; n <= 4; ++n)
          for (auto t : kTheorem1Targets) {
            const BigInt formula = theorem1(n, t);
            const BigInt hochster = betti_pair(static_cast<int>(n), t.i, t.j, Coefficients::rationals(), opt.budget);
            c.expect(formula == hochster, "n=" + std::to_string(n) + " " + t.to_string() + ": formula " +
                                              formula.str() + " vs Hochster " + hochster.str());
          }
        break;
      }
      case 4: {
        res.name = "published closed forms reproduce the n=3..9 table (42 entries)";
        const auto fx = Fixtures::load(opt.fixture_dir);
        const auto rows = table5(9);
        std::size_t compared = 0;
        c.expect(fx.table5.size() == rows.size(), "fixture has " + std::to_string(fx.table5.size()) + " rows");
        for (std::size_t r = 0; r < std::min(rows.size(), fx.table5.size()); ++r) {
          c.expect(rows[r].vertices == fx.table5[r].vertices, "row order mismatch");
          for (std::size_t k = 0; k < 6; ++k, ++compared)
            c.expect(rows[r].values[k] == fx.table5[r].values[k],
                     "n=" + std::to_string(rows[r].vertices) + " " + kTheorem1Targets[k].to_string() + ": formula " +
                         rows[r].values[k].str() + " vs table " + fx.table5[r].values[k].str());
        }
        c.expect(compared == 42, "compared " + std::to_string(compared) + " entries");
        break;
      }
      case 5: {
        res.name = "census re-derivation equals the published closed forms";
        res.time_limit = 60.0;
        for (auto t : kTheorem1Targets) {
          const auto d = formula_from_census(t);
          if (d.matches()) continue;
          std::string diff;
          for (const auto& [b, coef] : d.differences()) diff += " " + std::to_string(b) + "^n:" + coef.str();
          c.expect(false, t.to_string() + " derived " + d.derived.to_string("n") + " differs at" + diff);
        }
        break;
      }
      case 6: {
        res.name = "closed forms agree with brute-force census (k<=5, m<=4; k<=3, m<=6)";
        res.time_limit = 120.0;
        for (auto [m, k] : {std::pair{4, 5}, std::pair{6, 3}}) {
          const auto rep = verify_closed_forms(m, k, opt.budget.max_subsets);
          for (const auto& mm : rep.mismatches)
            c.expect(false, "k=" + std::to_string(mm.k) + " m=" + std::to_string(mm.m) + " class " +
                                mm.key.to_string() + ": " + mm.closed_form_value.str() + " vs " + mm.census_value.str());
          for (const auto& pf : rep.partition_failures) c.expect(false, "partition " + pf);
        }
        break;
      }
      case 7: {
        res.name = "Groebner basis certified for m<=4; normal form confluent";
        res.time_limit = 120.0;
        for (int m = 1; m <= 4; ++m) {
          const auto rep = certify_groebner(m);
          c.expect(rep.passed(), "m=" + std::to_string(m) + ": " + std::to_string(rep.failures.size()) +
                                     " S-pairs do not reduce to zero");
          c.expect(rep.basis_size == static_cast<std::size_t>(incomparable_pair_count(static_cast<unsigned>(m))),
                   "m=" + std::to_string(m) + " basis size " + std::to_string(rep.basis_size));
        }
        const auto bad = confluence_failures(1000, 20121021);
        c.expect(bad == 0, std::to_string(bad) + " of 1000 confluence trials failed");
        break;
      }
      case 8: {
        res.name = "independence complexes on <=5 vertices torsion-free; m=3 table field independent";
        res.time_limit = 60.0;
        for (const auto& [key, entry] : homology_table(5))
          c.expect(entry.profile.torsion_free(), "torsion in class " + entry.graph_class.representative.to_string());
        const auto q = betti_full(3, Coefficients::rationals(), opt.budget);
        for (auto p : {2, 3})
          c.expect(betti_full(3, Coefficients::prime(p), opt.budget) == q,
                   "m=3 table over F_" + std::to_string(p) + " differs from Q");
        break;
      }
      case 9: {
        res.name = "toric generator counts equal the closed form for beta_{0,2}";
        const auto fx = Fixtures::load(opt.fixture_dir);
        c.expect(fx.table1.size() == 6, "fixture has " + std::to_string(fx.table1.size()) + " rows");
        for (const auto& row : fx.table1) {
          const unsigned n = row.path_vertices - 1;
          const BigInt b02 = theorem1(n, {0, 2});
          c.expect(b02 == row.beta0, "P" + std::to_string(row.path_vertices) + ": " + b02.str() + " vs " +
                                         row.beta0.str());
          // First syzygies of the toric ideal against beta_{1,3} of the
          // initial ideal.
          if (row.beta1) {
            const BigInt b13 = theorem1(n, {1, 3});
            c.expect(*row.beta1 <= b13, "P" + std::to_string(row.path_vertices) + ": beta1 " + row.beta1->str() +
                                            " exceeds beta_{1,3} " + b13.str());
          }
        }
        break;
      }
      default:
        throw InvalidInput("unknown criterion " + std::to_string(id));
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.time_limit > 0 && res.seconds > res.time_limit)
    c.expect(false, "runtime " + std::to_string(res.seconds) + " s exceeds " + std::to_string(res.time_limit) + " s");
  res.passed = c.ok;
  res.detail = c.ok ? "ok" : c.log.str();
  return res;
}

inline std::vector<CriterionResult> selftest(const SelftestOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

}  // namespace cutbetti
