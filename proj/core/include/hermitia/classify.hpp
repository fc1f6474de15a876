#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hermitia/graph.hpp"
#include "hermitia/numeric.hpp"
#include "hermitia/switching.hpp"

namespace hermitia {

// -- parameter predicates ---------------------------------------------------
// All comparisons are exact. Each throws PreconditionError outside its domain.

/// K(r; k; p): r >= 2, k >= 2, 1 <= p <= k.
bool cor39_condition(int r, int k, int p);

/// K(r; k; a^i, b^-i, 0, 0, s) with s = k - a - b: r >= 2, k >= 2,
/// a >= b >= 0, a >= 1, a + b <= k.
bool lem38_condition(int r, int k, int a, int b);

/// K(r; k; a^i, 0, c^1, 0, s) with s = k - a - c: r >= 2, k >= 2,
/// a >= c >= 0, a >= 1, a + c <= k.
bool lem310_condition(int r, int k, int a, int c);

/// 1-based index of the first of the twelve cases that holds, if any.
std::optional<int> lem310_case(int r, int k, int a, int c);

/// Sub-case (1..3) of the plain join family that holds, if any. `n1` is the
/// size of the first class joined to the apex.
std::optional<int> thm12_ii_case(int r, int k, int p, int n1);

/// a = b = 1 and r = 2 (with r, k >= 2 and a >= b >= 1).
bool thm12_iii_condition(int r, int k, int a, int b);

/// Sub-case (1..9) for a >= c >= 1, if any.
std::optional<int> thm12_iv_case(int r, int k, int a, int c);

struct FormulaReport {
  std::optional<Rational> rho;
  std::optional<Rational> phi;
  std::optional<Rational> xi;
  std::optional<Rational> gamma;
  bool verdict = false;
};

/// phi and rho = phi - r/(r-1) - a/(a-1); verdict rho <= 0. Needs a >= 2, k >= 3.
FormulaReport formula_report_38(int r, int k, int a, int b);
/// gamma and xi = gamma - r/(r-1) - a/(a-1); verdict xi <= 0. Needs a >= 2, k >= 3.
FormulaReport formula_report_310(int r, int k, int a, int c);

// -- structural classification ---------------------------------------------

/// Partition classes of the underlying graph if it is complete multipartite
/// (classes ordered by smallest member). An edgeless graph has one class.
std::optional<std::vector<VertexSet>> multipartite_classes(const QuartGainGraph& g);

enum class P1Tag { multipartite, c3t };
std::string_view to_string(P1Tag tag);

/// Shape of the non-isolated part when it has exactly one positive
/// eigenvalue: positive complete multipartite, or complete tripartite whose
/// twin reduction is an odd triangle.
std::optional<P1Tag> p1_characterize(const QuartGainGraph& g);

enum class Case { thm12_i, thm12_ii, thm12_iii, thm12_iv, thm11, p1_multipartite, p1_c3t };
std::string_view to_string(Case c);

using ParamValue = std::variant<long, std::vector<long>, std::string>;

struct CaseMatch {
  Case kind = Case::thm11;
  std::map<std::string, ParamValue> params;
  /// G == apply_witness(family graph, witness) for the family named in params.
  std::optional<Witness> witness;
};

struct ClassificationResult {
  std::vector<CaseMatch> matches;  // at most one per Case, in Case order

  bool empty() const { return matches.empty(); }
  bool has(Case c) const;
  const CaseMatch* find(Case c) const;

  /// {"cases": [...], "params": {case: {...}}, "witness": {perm, theta, converse} | null}
  std::string to_json() const;
};

/// Requires a connected graph with a pendant vertex.
std::optional<ClassificationResult> thm11_classify(const QuartGainGraph& g);

/// Requires a connected graph with a cut vertex and no pendant vertex.
ClassificationResult thm12_classify(const QuartGainGraph& g);

/// Runs p1_characterize and whichever of the two classifiers applies.
ClassificationResult classify(const QuartGainGraph& g);

/// f2 is f1 plus vertex v. Throws HypothesisError unless f2 - v == f1, f1 is
/// connected, p(f1) = 1, rk(f2) = rk(f1) + 1 and p(f2) = 2. Returns whether
/// f1 is positive complete multipartite, v sees whole classes only, and v's
/// gains are constant per class once f1 is switched to all ones.
bool lem311_check(const QuartGainGraph& f1, const QuartGainGraph& f2, Vertex v);

}  // namespace hermitia
