#pragma once

// Closed forms in the edge count n for six graded Betti numbers of the
// initial ideal, hard-coded as published and re-derived from the census.

#include <cutbetti/common.hpp>
#include <cutbetti/simplicial.hpp>
#include <cutbetti/small_graph.hpp>
#include <cutbetti/subgraph_count.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

struct BettiTarget {
  int i = 0;
  int j = 0;

  std::string to_string() const { return "b" + std::to_string(i) + "," + std::to_string(j); }
  friend constexpr bool operator==(const BettiTarget&, const BettiTarget&) = default;
};

/// Column order of the published table.
inline constexpr std::array<BettiTarget, 6> kTheorem1Targets{
    {{0, 2}, {1, 3}, {2, 4}, {1, 4}, {2, 5}, {3, 5}}};

inline std::size_t target_index(BettiTarget t) {
  for (std::size_t k = 0; k < kTheorem1Targets.size(); ++k)
    if (kTheorem1Targets[k] == t) return k;
  throw InvalidInput("no closed form for beta_" + std::to_string(t.i) + "," + std::to_string(t.j));
}

/// The published right-hand sides, transcribed verbatim.
inline ClosedForm theorem1_form(BettiTarget t) {
  switch (target_index(t)) {
    case 0:
      return ClosedForm::from_integers({{1, 4}, {-2, 3}, {1, 2}}, 2);
    case 1:
      return ClosedForm::from_integers({{1, 8}, {-3, 6}, {3, 4}, {-1, 2}}, 3);
    case 2:
      return ClosedForm::from_integers(
          {{1, 16}, {-4, 12}, {6, 8}, {2, 7}, {-4, 6}, {4, 5}, {-9, 4}, {2, 3}, {2, 2}}, 8);
    case 3:
      return ClosedForm::from_integers({{1, 7}, {-4, 6}, {6, 5}, {-4, 4}, {1, 3}}, 4);
    case 4:
      return ClosedForm::from_integers({{3, 14},
                                        {-12, 12},
                                        {-2, 11},
                                        {22, 10},
                                        {-2, 9},
                                        {-9, 8},
                                        {-6, 7},
                                        {9, 6},
                                        {-10, 5},
                                        {11, 4},
                                        {-4, 3}},
                                       12);
    default:
      return ClosedForm::from_integers({{2, 32},   {-10, 24},  {30, 20},  {-120, 18}, {30, 17},
                                        {-40, 16}, {180, 15},  {375, 14}, {-420, 13}, {-180, 12},
                                        {200, 11}, {-280, 10}, {-220, 9}, {985, 8},   {-720, 7},
                                        {655, 6},  {-710, 5},  {35, 4},   {340, 3},   {-132, 2}},
                                       60);
  }
}

/// Published closed form evaluated at n edges; throws VerificationFailure if
/// the value is not an integer.
inline BigInt theorem1(unsigned n, BettiTarget t) {
  if (n < 1) throw InvalidInput("theorem1: n must be at least 1");
  return theorem1_form(t).evaluate_integer(n);
}

/// Rows indexed by vertex count; the tree on `vertices` vertices has
/// vertices - 1 edges.
struct FormulaRow {
  unsigned vertices = 0;
  std::array<BigInt, 6> values;
};

inline std::vector<FormulaRow> formula_table(unsigned vertex_max, bool derived = false);

inline std::vector<FormulaRow> table5(unsigned vertex_max) { return formula_table(vertex_max, false); }

struct FormulaDerivation {
  BettiTarget target;
  ClosedForm derived;
  ClosedForm published;
  std::vector<std::pair<std::string, std::string>> class_terms;  // (class, rank * form)

  bool matches() const { return derived == published; }

  /// Bases where the coefficients differ: (base, derived - published).
  std::vector<std::pair<std::uint64_t, Rational>> differences() const {
    std::vector<std::pair<std::uint64_t, Rational>> out;
    const ClosedForm delta = derived - published;
    for (const auto& [b, c] : delta.terms()) out.emplace_back(b, c);
    return out;
  }
};

/// Sum over classes H on j vertices of rank H~_{j-i-2}(Ind(H)) * closed_form(H).
inline FormulaDerivation formula_from_census(BettiTarget t) {
  (void)target_index(t);
  FormulaDerivation d{t, {}, theorem1_form(t), {}};
  const int dim = t.j - t.i - 2;
  for (const auto& cls : isomorphism_classes(t.j)) {
    const auto rank = reduced_homology(independence_complex(cls.representative)).rank(dim);
    if (rank == 0) continue;
    const ClosedForm term = Rational(static_cast<long long>(rank)) * closed_form(cls.representative);
    d.class_terms.emplace_back(cls.representative.to_string(), term.to_string("n"));
    d.derived += term;
  }
  return d;
}

inline ClosedForm derived_form(BettiTarget t) { return formula_from_census(t).derived; }

inline std::vector<FormulaRow> formula_table(unsigned vertex_max, bool derived) {
  if (vertex_max > 64) throw SizeLimitExceeded("formula table supports at most 64 vertices");
  std::array<ClosedForm, 6> forms;
  for (std::size_t k = 0; k < 6; ++k)
    forms[k] = derived ? derived_form(kTheorem1Targets[k]) : theorem1_form(kTheorem1Targets[k]);
  std::vector<FormulaRow> rows;
  for (unsigned v = 3; v <= vertex_max; ++v) {
    FormulaRow row{v, {}};
    for (std::size_t k = 0; k < 6; ++k) row.values[k] = forms[k].evaluate_integer(v - 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cutbetti
