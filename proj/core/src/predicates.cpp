#include <string>

#include "hermitia/classify.hpp"
#include "hermitia/errors.hpp"

namespace hermitia {

namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw PreconditionError(what);
  }
}

Rational frac(long num, long den) { return Rational(num, den); }

// 1/x + 1/y + 1/z >= 1
bool reciprocal_sum_at_least_one(long x, long y, long z) {
  return frac(1, x) + frac(1, y) + frac(1, z) >= Rational(1);
}

}  // namespace

bool cor39_condition(int r, int k, int p) {
  require(r >= 2 && k >= 2 && p >= 1 && p <= k, "cor39_condition: need r >= 2, k >= 2, 1 <= p <= k");
  if (p == 1) {
    return true;
  }
  if (k - p <= 1) {
    return true;
  }
  return reciprocal_sum_at_least_one(r, p, k - p - 1);
}

bool lem38_condition(int r, int k, int a, int b) {
  require(r >= 2 && k >= 2 && a >= b && b >= 0 && a >= 1 && a + b <= k,
          "lem38_condition: need r >= 2, k >= 2, a >= b >= 0, a >= 1, a + b <= k");
  const int s = k - a - b;
  if (a == 1 && b == 0) {
    return true;
  }
  if (a == 1 && b == 1) {
    return r == 2;
  }
  if (a >= 2 && b == 0) {
    return s <= 1 || reciprocal_sum_at_least_one(r, a, s - 1);
  }
  return false;
}

std::optional<int> lem310_case(int r, int k, int a, int c) {
  require(r >= 2 && k >= 2 && a >= c && c >= 0 && a >= 1 && a + c <= k,
          "lem310_condition: need r >= 2, k >= 2, a >= c >= 0, a >= 1, a + c <= k");
  const int s = k - a - c;
  if (a == 1 && c == 0) return 1;
  if (a == 1 && c == 1) {
    if (s <= 1) return 2;
    if (s == 2 && (r == 3 || r == 4)) return 3;
    if (s == 3 && r == 3) return 4;
    if (r == 2) return 5;
    return std::nullopt;
  }
  if (a == 2 && c == 2 && s == 0 && r <= 4) return 6;
  if (a == 2 && c == 2 && s == 1 && r == 2) return 7;
  if (a == 3 && c == 2 && s == 0 && r == 2) return 8;
  if (a == 4 && c == 2 && s == 0 && r == 2) return 9;
  if (a >= 2 && c == 1 && frac(static_cast<long>(a) * s - 1, a + s) <= frac(1, r - 1)) return 10;
  if (a >= 2 && c == 0 && s <= 1) return 11;
  if (a >= 2 && c == 0 && s >= 2 && reciprocal_sum_at_least_one(r, a, s - 1)) return 12;
  return std::nullopt;
}

bool lem310_condition(int r, int k, int a, int c) { return lem310_case(r, k, a, c).has_value(); }

std::optional<int> thm12_ii_case(int r, int k, int p, int n1) {
  require(r >= 2 && k >= 2 && p >= 1 && p <= k && n1 >= 1, "thm12 (ii): need r >= 2, k >= 2, 1 <= p <= k, n1 >= 1");
  if (p == 1) {
    if ((n1 == 1 && k - p >= 2) || n1 >= 2) return 1;
    return std::nullopt;
  }
  if (k - p <= 1) return 2;
  if (reciprocal_sum_at_least_one(r, p, k - p - 1)) return 3;
  return std::nullopt;
}

bool thm12_iii_condition(int r, int k, int a, int b) {
  require(r >= 2 && k >= 2 && a >= b && b >= 1 && a + b <= k, "thm12 (iii): need r >= 2, k >= 2, a >= b >= 1, a + b <= k");
  return a == 1 && b == 1 && r == 2;
}

std::optional<int> thm12_iv_case(int r, int k, int a, int c) {
  require(r >= 2 && k >= 2 && a >= c && c >= 1 && a + c <= k, "thm12 (iv): need r >= 2, k >= 2, a >= c >= 1, a + c <= k");
  // The nine sub-cases are cases 2..10 of the twelve-case list.
  const auto hit = lem310_case(r, k, a, c);
  if (hit && *hit >= 2 && *hit <= 10) {
    return *hit - 1;
  }
  return std::nullopt;
}

FormulaReport formula_report_38(int r, int k, int a, int b) {
  require(r >= 2 && a >= 2 && k >= 3 && b >= 0 && b <= a && a + b <= k,
          "formula_report_38: need r >= 2, a >= 2, k >= 3, 0 <= b <= a, a + b <= k");
  const long s = k - a - b;
  const Rational num = Rational(static_cast<long>(b) * (2 * a - 1) * (2 * a - 1) * (k - 1)) +
                       Rational(s * (a - b) * (a - b) * (a - 1));
  const Rational den(static_cast<long>(a - 1) * (a + b - 1) * (k - 1));
  FormulaReport out;
  out.phi = num / den;
  out.rho = *out.phi - frac(r, r - 1) - frac(a, a - 1);
  out.verdict = out.rho->sign() <= 0;
  return out;
}

FormulaReport formula_report_310(int r, int k, int a, int c) {
  require(r >= 2 && a >= 2 && k >= 3 && c >= 0 && c <= a && a + c <= k,
          "formula_report_310: need r >= 2, a >= 2, k >= 3, 0 <= c <= a, a + c <= k");
  const long s = k - a - c;
  const long sq = static_cast<long>(a - 1) * (a - 1) + static_cast<long>(a) * a;
  const Rational num = Rational(static_cast<long>(c) * sq * (k - 1)) +
                       Rational(s * (a - 1) * (static_cast<long>(a) * a + static_cast<long>(c) * c));
  const Rational den(static_cast<long>(a - 1) * (a + c - 1) * (k - 1));
  FormulaReport out;
  out.gamma = num / den;
  out.xi = *out.gamma - frac(r, r - 1) - frac(a, a - 1);
  out.verdict = out.xi->sign() <= 0;
  return out;
}

}  // namespace hermitia
