// cutbetti: Betti numbers of initial ideals of cut ideals of trees.
//
// Exit status: 0 success, 1 verification mismatch, 2 invalid input,
// 3 size budget exceeded.

#include <cutbetti/cut_ideal.hpp>
#include <cutbetti/fixtures.hpp>
#include <cutbetti/formulas.hpp>
#include <cutbetti/hochster.hpp>
#include <cutbetti/incomparability_graph.hpp>
#include <cutbetti/selftest.hpp>
#include <cutbetti/simplicial.hpp>
#include <cutbetti/subgraph_count.hpp>
#include <cutbetti/tree.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef CUTBETTI_FIXTURE_DIR
#define CUTBETTI_FIXTURE_DIR "fixtures"
#endif

namespace {

using cutbetti::BigInt;
using json = nlohmann::json;

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

struct Globals {
  unsigned threads = 1;
  std::uint64_t max_subsets = 50'000'000;
  std::size_t max_faces = 1'000'000;
  std::string output;

  cutbetti::Budget budget() const { return {max_subsets, max_faces, threads}; }
};

unsigned default_threads() {
  if (const char* env = std::getenv("CUTBETTI_THREADS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json subset_json(std::uint64_t bits, int width) { return cutbetti::EdgeSubset(bits, width).to_string(); }

json monomial_json(const cutbetti::CutMonomial& mono) {
  json arr = json::array();
  for (const auto& [bits, e] : mono.exponents()) arr.push_back({{"subset", subset_json(bits, mono.width())}, {"exponent", e}});
  return arr;
}

json profile_json(const cutbetti::HomologyProfile& p) {
  json ranks = json::object();
  json torsion = json::object();
  for (int d = -1; d <= p.top_dimension(); ++d) {
    if (p.rank(d) != 0) ranks[std::to_string(d)] = p.rank(d);
    if (!p.torsion(d).empty()) {
      json t = json::array();
      for (const auto& f : p.torsion(d)) t.push_back(f.str());
      torsion[std::to_string(d)] = t;
    }
  }
  return {{"ranks", ranks}, {"torsion", torsion}, {"torsion_free", p.torsion_free()}};
}

json closed_form_json(const cutbetti::ClosedForm& f, const std::string& var) {
  const auto n = f.normalized();
  json terms = json::array();
  for (const auto& [c, b] : n.terms) terms.push_back({{"base", b}, {"coefficient", c.str()}});
  return {{"text", f.to_string(var)}, {"divisor", n.divisor.str()}, {"terms", terms}};
}

// Betti diagram as JSON/CSV.
json betti_json(const cutbetti::BettiTable& t) {
  json entries = json::array();
  for (const auto& [ij, v] : t.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v.str()}});
  json totals = json::array();
  for (const auto& v : t.totals()) totals.push_back(v.str());
  return {{"edges", t.ground_size()},
          {"field", t.coefficients().name()},
          {"route", cutbetti::to_string(t.route())},
          {"entries", entries},
          {"totals", totals}};
}

std::string betti_csv(const cutbetti::BettiTable& t) {
  std::ostringstream os;
  os << "i,j,value\n";
  for (const auto& [ij, v] : t.entries()) os << ij.first << ',' << ij.second << ',' << v << '\n';
  return os.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw cutbetti::InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int edges_from(const std::optional<int>& edges, const std::string& tree_file) {
  if (!tree_file.empty()) {
    std::ifstream in(tree_file);
    if (!in) throw cutbetti::InvalidInput("cannot open tree file " + tree_file);
    return cutbetti::Tree::parse(in).edge_count();
  }
  if (!edges) throw cutbetti::InvalidInput("either --edges or --tree is required");
  if (*edges < 0) throw cutbetti::InvalidInput("--edges must be nonnegative");
  return *edges;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of initial ideals of cut ideals of trees"};
  app.require_subcommand(1);
  Globals g;
  g.threads = default_threads();
  app.add_option("--threads", g.threads, "Worker threads (default $CUTBETTI_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--max-subsets", g.max_subsets, "Budget for enumerated vertex subsets")->check(CLI::PositiveNumber);
  app.add_option("--max-faces", g.max_faces, "Budget for faces of one complex")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");

  // betti
  auto* betti = app.add_subcommand("betti", "Graded Betti numbers via Hochster's formula");
  std::optional<int> b_edges;
  std::string b_tree;
  std::vector<int> b_pair;
  bool b_full = false;
  std::string b_field = "q";
  std::string b_route = "enumerate";
  std::string b_format = "m2";
  betti->add_option("--edges", b_edges, "Tree edge count m");
  betti->add_option("--tree", b_tree, "Tree file ('vertices N' header, one 'u v' edge per line)");
  auto* pair_opt = betti->add_option("--pair", b_pair, "Single entry: i j")->expected(2);
  auto* full_opt = betti->add_flag("--full", b_full, "Complete diagram (m <= 4)");
  pair_opt->excludes(full_opt);
  betti->add_option("--field", b_field, "Coefficients: q, 2, 3, ... or z")->capture_default_str();
  betti->add_option("--route", b_route, "enumerate | census")
      ->check(CLI::IsMember({"enumerate", "census"}))
      ->capture_default_str();
  betti->add_option("--format", b_format, "m2 | json | csv")->check(CLI::IsMember({"m2", "json", "csv"}))->capture_default_str();

  // formulas
  auto* formulas = app.add_subcommand("formulas", "Evaluate the six closed forms for trees on 3..N vertices");
  unsigned f_nmax = 9;
  std::string f_format = "text";
  bool f_derived = false;
  formulas->add_option("--n-max", f_nmax, "Largest vertex count")->check(CLI::Range(3U, 64U))->capture_default_str();
  formulas->add_option("--format", f_format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  formulas->add_flag("--derived", f_derived, "Use the census-derived forms instead of the published ones");

  // derive
  auto* derive = app.add_subcommand("derive", "Re-derive the closed forms from the subgraph census");
  std::string d_format = "text";
  derive->add_option("--format", d_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // groebner
  auto* groebner = app.add_subcommand("groebner", "Quadratic Groebner basis of the cut ideal");
  int g_edges = 3;
  bool g_certify = false;
  bool g_list = false;
  groebner->add_option("--edges", g_edges, "Tree edge count m")->required();
  groebner->add_flag("--certify", g_certify, "Run the Buchberger S-pair check (m <= 5)");
  groebner->add_flag("--list", g_list, "Include the basis elements");

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Incomparability graph of the subsets of the edge set");
  int gm_edges = 3;
  bool gm_list = false;
  gamma->add_option("--edges", gm_edges, "Tree edge count m")->required();
  gamma->add_flag("--edge-list", gm_list, "Include the edges as subset pairs");

  // census
  auto* census = app.add_subcommand("census", "Induced-subgraph census by brute force and closed form");
  int c_edges = 3;
  int c_k = 3;
  std::string c_format = "text";
  census->add_option("--edges", c_edges, "Tree edge count m")->required();
  census->add_option("--k", c_k, "Pattern size")->check(CLI::Range(1, 5))->required();
  census->add_option("--format", c_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "Closed form for the induced copies of one pattern");
  std::string cf_pattern;
  std::string cf_format = "text";
  std::string cf_var = "m";
  closed->add_option("pattern", cf_pattern, "Pattern as 'k; u-v,u-v,...'")->required();
  closed->add_option("--format", cf_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  closed->add_option("--var", cf_var, "Variable name in text output")->capture_default_str();

  // homology-table
  auto* htable = app.add_subcommand("homology-table", "Reduced homology of independence complexes of small graphs");
  int h_maxk = 5;
  std::string h_format = "text";
  std::string h_field = "z";
  htable->add_option("--max-k", h_maxk, "Largest vertex count")->check(CLI::Range(1, 6))->capture_default_str();
  htable->add_option("--format", h_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  htable->add_option("--field", h_field, "Coefficients: z, q or a prime")->capture_default_str();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Run the fixture-backed acceptance checks");
  bool s_quick = false;
  std::string s_fixtures = CUTBETTI_FIXTURE_DIR;
  std::string s_format = "text";
  std::vector<int> s_only;
  selftest->add_flag("--quick", s_quick, "Skip the m = 4 full diagram");
  selftest->add_option("--fixtures", s_fixtures, "Fixture directory")->capture_default_str();
  selftest->add_option("--format", s_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  selftest->add_option("--criterion", s_only, "Run only these criteria (1-9)")->check(CLI::Range(1, cutbetti::kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kInvalid;
  }

  try {
    Output sink(g.output);
    std::ostream& out = sink.out();

    if (betti->parsed()) {
      const int m = edges_from(b_edges, b_tree);
      const auto coeff = cutbetti::Coefficients::parse(b_field);
      if (b_full) {
        if (b_route != "enumerate") throw cutbetti::InvalidInput("--full supports only --route enumerate");
        const auto table = cutbetti::betti_full(m, coeff, g.budget());
        if (b_format == "m2")
          out << table.to_m2();
        else if (b_format == "json")
          out << dump(betti_json(table));
        else
          out << betti_csv(table);
        return kOk;
      }
      if (b_pair.size() != 2) throw cutbetti::InvalidInput("give --pair i j or --full");
      const int i = b_pair[0];
      const int j = b_pair[1];
      const BigInt v = b_route == "census" ? cutbetti::betti_via_census(m, i, j, coeff, cutbetti::CensusSource::ClosedForms, g.budget())
                                           : cutbetti::betti_pair(m, i, j, coeff, g.budget());
      if (b_format == "json")
        out << dump({{"edges", m}, {"i", i}, {"j", j}, {"field", coeff.name()}, {"route", b_route}, {"value", v.str()}});
      else if (b_format == "csv")
        out << "edges,i,j,value\n" << m << ',' << i << ',' << j << ',' << v << '\n';
      else
        out << "b" << i << "," << j << " = " << v << '\n';
      return kOk;
    }

    if (formulas->parsed()) {
      const auto rows = cutbetti::formula_table(f_nmax, f_derived);
      if (f_format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
          json row{{"n", r.vertices}};
          for (std::size_t k = 0; k < 6; ++k) row[cutbetti::kTheorem1Targets[k].to_string()] = r.values[k].str();
          arr.push_back(row);
        }
        out << dump({{"source", f_derived ? "derived" : "published"}, {"rows", arr}});
      } else if (f_format == "csv") {
        out << "n,b02,b13,b24,b14,b25,b35\n";
        for (const auto& r : rows) {
          out << r.vertices;
          for (const auto& v : r.values) out << ',' << v;
          out << '\n';
        }
      } else {
        std::vector<std::size_t> w(7, 2);
        w[0] = 2;
        for (std::size_t k = 0; k < 6; ++k) w[k + 1] = cutbetti::kTheorem1Targets[k].to_string().size();
        for (const auto& r : rows)
          for (std::size_t k = 0; k < 6; ++k) w[k + 1] = std::max(w[k + 1], r.values[k].str().size());
        out << std::setw(static_cast<int>(w[0])) << "n" << " |";
        for (std::size_t k = 0; k < 6; ++k)
          out << ' ' << std::setw(static_cast<int>(w[k + 1])) << cutbetti::kTheorem1Targets[k].to_string();
        out << '\n';
        for (const auto& r : rows) {
          out << std::setw(static_cast<int>(w[0])) << r.vertices << " |";
          for (std::size_t k = 0; k < 6; ++k) out << ' ' << std::setw(static_cast<int>(w[k + 1])) << r.values[k].str();
          out << '\n';
        }
      }
      return kOk;
    }

    if (derive->parsed()) {
      bool all = true;
      json arr = json::array();
      std::ostringstream text;
      for (auto t : cutbetti::kTheorem1Targets) {
        const auto d = cutbetti::formula_from_census(t);
        all = all && d.matches();
        json diffs = json::array();
        for (const auto& [b, c] : d.differences()) diffs.push_back({{"base", b}, {"derived_minus_published", c.str()}});
        json terms = json::array();
        for (const auto& [cls, form] : d.class_terms) terms.push_back({{"class", cls}, {"contribution", form}});
        arr.push_back({{"target", t.to_string()},
                       {"match", d.matches()},
                       {"derived", closed_form_json(d.derived, "n")},
                       {"published", closed_form_json(d.published, "n")},
                       {"differences", diffs},
                       {"class_terms", terms}});
        text << t.to_string() << (d.matches() ? "  match\n" : "  MISMATCH\n")
             << "  derived:   " << d.derived.to_string("n") << '\n'
             << "  published: " << d.published.to_string("n") << '\n';
        for (const auto& [b, c] : d.differences()) text << "    " << b << "^n: derived - published = " << c.str() << '\n';
      }
      if (d_format == "json")
        out << dump({{"all_match", all}, {"targets", arr}});
      else
        out << text.str();
      return all ? kOk : kMismatch;
    }

    if (groebner->parsed()) {
      json j{{"edges", g_edges}};
      const auto basis = cutbetti::groebner_basis(g_edges);
      j["basis_size"] = basis.size();
      if (g_list) {
        json arr = json::array();
        for (const auto& b : basis) arr.push_back({{"lead", monomial_json(b.lead())}, {"trail", monomial_json(b.trail())}});
        j["basis"] = arr;
      }
      bool ok = true;
      if (g_certify) {
        const auto rep = cutbetti::certify_groebner(g_edges);
        ok = rep.passed();
        json fails = json::array();
        for (const auto& f : rep.failures) fails.push_back({{"pair", {f.first, f.second}}, {"residue", f.residue}});
        j["certification"] = {{"passed", rep.passed()},
                              {"s_pairs", rep.s_pairs},
                              {"coprime_pairs", rep.coprime_pairs},
                              {"reduced_to_zero", rep.reduced_to_zero},
                              {"leads_ordered", rep.leads_ordered},
                              {"phi_preserved", rep.phi_preserved},
                              {"failures", fails}};
      }
      out << dump(j);
      return ok ? kOk : kMismatch;
    }

    if (gamma->parsed()) {
      const auto graph = cutbetti::IncGraph::build(gm_edges);
      json j{{"edges", gm_edges},
             {"vertex_count", graph.vertex_count()},
             {"edge_count", graph.count_edges()},
             {"edge_count_formula", cutbetti::incomparable_pair_count(static_cast<unsigned>(gm_edges)).str()}};
      if (gm_list) {
        json arr = json::array();
        for (auto [x, y] : graph.edges()) arr.push_back({subset_json(x, gm_edges), subset_json(y, gm_edges)});
        j["edge_list"] = arr;
      }
      out << dump(j);
      return kOk;
    }

    if (census->parsed()) {
      const auto counts = cutbetti::census_bruteforce(c_edges, c_k, g.max_subsets);
      bool ok = true;
      json arr = json::array();
      std::ostringstream text;
      for (const auto& cls : cutbetti::isomorphism_classes(c_k)) {
        const auto form = cutbetti::closed_form(cls.representative);
        const BigInt predicted = form.evaluate_integer(static_cast<unsigned>(c_edges));
        const BigInt& actual = counts.at(cls.key);
        ok = ok && predicted == actual;
        arr.push_back({{"class", cls.representative.to_string()},
                       {"automorphisms", cls.automorphisms},
                       {"census", actual.str()},
                       {"closed_form", form.to_string()},
                       {"closed_form_value", predicted.str()}});
        text << std::left << std::setw(28) << cls.representative.to_string() << std::right << std::setw(12) << actual
             << "  " << form.to_string() << (predicted == actual ? "" : "  MISMATCH") << '\n';
      }
      if (c_format == "json")
        out << dump({{"edges", c_edges}, {"k", c_k}, {"classes", arr}, {"agree", ok}});
      else
        out << text.str();
      return ok ? kOk : kMismatch;
    }

    if (closed->parsed()) {
      const auto pattern = cutbetti::SmallGraph::parse(cf_pattern);
      const auto form = cutbetti::closed_form(pattern);
      if (cf_format == "json")
        out << dump({{"pattern", pattern.to_string()},
                     {"automorphisms", cutbetti::canonical_form(pattern).automorphisms},
                     {"closed_form", closed_form_json(form, cf_var)}});
      else
        out << form.to_string(cf_var) << '\n';
      return kOk;
    }

    if (htable->parsed()) {
      const auto coeff = cutbetti::Coefficients::parse(h_field);
      const auto table = cutbetti::homology_table(h_maxk, coeff);
      bool torsion_free = true;
      json arr = json::array();
      std::ostringstream text;
      text << std::left << std::setw(36) << "graph" << std::right << std::setw(6) << "H~-1" << std::setw(6) << "H~0"
           << std::setw(6) << "H~1" << std::setw(6) << "H~2" << "  torsion\n";
      for (const auto& [key, e] : table) {
        torsion_free = torsion_free && e.profile.torsion_free();
        arr.push_back({{"class", e.graph_class.representative.to_string()},
                       {"key", key.to_string()},
                       {"homology", profile_json(e.profile)}});
        text << std::left << std::setw(36) << e.graph_class.representative.to_string() << std::right;
        for (int d = -1; d <= 2; ++d) text << std::setw(6) << e.profile.rank(d);
        text << "  " << (e.profile.torsion_free() ? "none" : "YES") << '\n';
      }
      if (h_format == "json")
        out << dump({{"max_k", h_maxk}, {"field", coeff.name()}, {"classes", arr}, {"torsion_free", torsion_free}});
      else
        out << text.str();
      return kOk;
    }

    if (selftest->parsed()) {
      cutbetti::SelftestOptions opt{s_fixtures, s_quick, g.budget()};
      std::vector<cutbetti::CriterionResult> results;
      if (s_only.empty()) {
        results = cutbetti::selftest(opt);
      } else {
        for (int id : s_only) results.push_back(cutbetti::run_criterion(id, opt));
      }
      bool ok = true;
      json arr = json::array();
      for (const auto& r : results) {
        ok = ok && r.passed;
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"skipped", r.skipped},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
        if (s_format == "text")
          out << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
              << std::fixed << std::setprecision(2) << r.seconds << " s)" << (r.passed ? "" : "\n      " + r.detail)
              << '\n';
      }
      if (s_format == "json") out << dump({{"passed", ok}, {"criteria", arr}});
      return ok ? kOk : kMismatch;
    }
  } catch (const cutbetti::SizeLimitExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const cutbetti::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const cutbetti::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
