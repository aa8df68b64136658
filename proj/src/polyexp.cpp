#include "mapasym/polyexp.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "mapasym/errors.hpp"

namespace mapasym {

PolyExpSum PolyExpSum::constant(const Rational& c) { return term(c, 0, 0); }

PolyExpSum PolyExpSum::term(const Rational& c, int degree, int rate) {
  PolyExpSum out;
  if (c != 0) {
    std::vector<Rational> poly(degree + 1, Rational(0));
    poly[degree] = c;
    out.terms_[rate] = std::move(poly);
  }
  return out;
}

void PolyExpSum::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    auto& poly = it->second;
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.empty()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

PolyExpSum& PolyExpSum::operator+=(const PolyExpSum& other) {
  for (const auto& [rate, poly] : other.terms_) {
    auto& dst = terms_[rate];
    if (dst.size() < poly.size()) dst.resize(poly.size(), Rational(0));
    for (size_t j = 0; j < poly.size(); ++j) dst[j] += poly[j];
  }
  prune();
  return *this;
}

PolyExpSum PolyExpSum::scaled(const Rational& c) const {
  PolyExpSum out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [rate, poly] : out.terms_)
    for (auto& coef : poly) coef *= c;
  return out;
}

PolyExpSum operator*(const PolyExpSum& a, const PolyExpSum& b) {
  PolyExpSum out;
  for (const auto& [ra, pa] : a.terms_) {
    for (const auto& [rb, pb] : b.terms_) {
      auto& dst = out.terms_[ra + rb];
      if (dst.size() < pa.size() + pb.size() - 1)
        dst.resize(pa.size() + pb.size() - 1, Rational(0));
      for (size_t i = 0; i < pa.size(); ++i)
        for (size_t j = 0; j < pb.size(); ++j) dst[i + j] += pa[i] * pb[j];
    }
  }
  out.prune();
  return out;
}

PolyExpSum PolyExpSum::derivative(int k) const {
  PolyExpSum out = *this;
  for (; k > 0; --k) {
    PolyExpSum next;
    for (const auto& [rate, poly] : out.terms_) {
      // d/dt [p(t) e^{at}] = (p' + a p) e^{at}
      std::vector<Rational> d(poly.size(), Rational(0));
      for (size_t j = 0; j + 1 < poly.size(); ++j) d[j] = Rational(long(j + 1)) * poly[j + 1];
      if (rate != 0)
        for (size_t j = 0; j < poly.size(); ++j) d[j] += Rational(rate) * poly[j];
      PolyExpSum piece;
      piece.terms_[rate] = std::move(d);
      piece.prune();
      next += piece;
    }
    out = std::move(next);
  }
  return out;
}

double PolyExpSum::evaluate(double t) const {
  double sum = 0.0;
  for (const auto& [rate, poly] : terms_) {
    if (rate * t > 700.0)
      throw OverflowError("PolyExpSum::evaluate: exp(" + std::to_string(rate * t) + ") overflows");
    double p = 0.0;
    for (size_t j = poly.size(); j-- > 0;) p = p * t + poly[j].get_d();
    sum += p * std::exp(rate * t);
  }
  return sum;
}

Rational PolyExpSum::value_at_zero() const {
  Rational v(0);
  for (const auto& [rate, poly] : terms_) v += poly[0];
  return v;
}

int PolyExpSum::max_rate() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::string PolyExpSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [rate, poly] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    os << "(";
    bool first_coef = true;
    for (size_t j = 0; j < poly.size(); ++j) {
      if (poly[j] == 0) continue;
      if (!first_coef) os << (poly[j] > 0 ? " + " : " - ");
      else if (poly[j] < 0) os << "-";
      first_coef = false;
      os << Rational(abs(poly[j])).get_str();
      if (j == 1) os << " t";
      else if (j > 1) os << " t^" << j;
    }
    os << ")";
    if (rate == 1) os << "*exp(t)";
    else if (rate != 0) os << "*exp(" << rate << "t)";
  }
  return os.str();
}

PolyExpSum solve_forced_linear(const PolyExpSum& rhs, const Rational& initial_value) {
  PolyExpSum g;
  for (const auto& [rate, poly] : rhs.terms()) {
    PolyExpSum piece;
    if (rate == 1) {
      // resonant: c t^j e^t -> c t^{j+1}/(j+1) e^t
      for (size_t j = 0; j < poly.size(); ++j)
        piece += PolyExpSum::term(poly[j] / Rational(long(j + 1)), int(j) + 1, 1);
    } else {
      // q' + (a-1) q = p, solved by descending-degree back-substitution
      const Rational am1(rate - 1);
      std::vector<Rational> q(poly.size(), Rational(0));
      for (size_t j = poly.size(); j-- > 0;) {
        Rational v = poly[j];
        if (j + 1 < q.size()) v -= Rational(long(j + 1)) * q[j + 1];
        q[j] = v / am1;
      }
      for (size_t j = 0; j < q.size(); ++j) piece += PolyExpSum::term(q[j], int(j), rate);
    }
    g += piece;
  }
  // homogeneous part C e^t fixed by g(0) = initial_value
  g += PolyExpSum::term(initial_value - g.value_at_zero(), 0, 1);
  return g;
}

}  // namespace mapasym
