#ifndef MAPASYM_POLYEXP_HPP
#define MAPASYM_POLYEXP_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace mapasym {

using Rational = mpq_class;

/// Exact sum of polynomial-times-exponential terms in the slow time t,
///   sum_a p_a(t) * exp(a*t),
/// with non-negative integer rates a and rational polynomial coefficients.
/// The representation is canonical: zero polynomials are pruned, so two
/// equal sums compare equal structurally.
class PolyExpSum {
 public:
  PolyExpSum() = default;

  static PolyExpSum constant(const Rational& c);
  // c * t^degree * exp(rate*t)
  static PolyExpSum term(const Rational& c, int degree, int rate);

  PolyExpSum& operator+=(const PolyExpSum& other);
  friend PolyExpSum operator+(PolyExpSum a, const PolyExpSum& b) {
    a += b;
    return a;
  }
  friend PolyExpSum operator-(const PolyExpSum& a, const PolyExpSum& b) {
    return a + b.scaled(Rational(-1));
  }
  friend PolyExpSum operator*(const PolyExpSum& a, const PolyExpSum& b);

  PolyExpSum scaled(const Rational& c) const;
  PolyExpSum derivative(int k = 1) const;

  // Floating-point value, summing terms in ascending rate order.
  // Throws OverflowError if any rate*t > 700.
  double evaluate(double t) const;

  Rational value_at_zero() const;

  bool is_zero() const { return terms_.empty(); }
  int max_rate() const;
  const std::map<int, std::vector<Rational>>& terms() const { return terms_; }

  bool operator==(const PolyExpSum& other) const = default;

  // Human-readable rendering with exact fractions, e.g.
  // "(-1/27 - 1/54 t)*exp(2t)".  Used by golden tests.
  std::string to_string() const;

 private:
  // rate -> polynomial coefficients, ascending degree
  std::map<int, std::vector<Rational>> terms_;
  void prune();
};

/// Solves g' - g = rhs with g(0) = initial_value within the PolyExpSum class.
/// Non-resonant rates (a != 1) get particular solutions at the same rate;
/// resonant terms c*t^j*e^t integrate up to c*t^{j+1}/(j+1)*e^t; the
/// homogeneous constant multiplies e^t and is fixed by the initial value.
PolyExpSum solve_forced_linear(const PolyExpSum& rhs, const Rational& initial_value);

}  // namespace mapasym

#endif
