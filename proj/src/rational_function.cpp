#include "wordchar/rational_function.hpp"

#include <limits>

namespace wordchar {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rat(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Rat lead = den_.leading_coeff();
  if (lead != 1) {
    den_ = den_.scaled(Rat(1) / lead);
    num_ = num_.scaled(Rat(1) / lead);
  }
}

int RationalFunction::degree_gap() const {
  if (is_zero()) return std::numeric_limits<int>::max();
  return den_.degree() - num_.degree();
}

Rat RationalFunction::evaluate(const Rat& x) const {
  Rat d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("RationalFunction: pole at evaluation point");
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + " / (" + d + ")";
}

RationalFunction reciprocal_substitute(const RationalFunction& f) {
  if (f.is_zero()) return f;
  int d = std::max(f.num().degree(), f.den().degree());
  return RationalFunction(f.num().reversed(d), f.den().reversed(d));
}

std::vector<Rat> taylor_coefficients(const RationalFunction& f, int count) {
  if (count < 1) throw std::invalid_argument("taylor_coefficients: count must be positive");
  Rat d0 = f.den().coeff(0);
  if (d0 == 0) throw std::domain_error("taylor_coefficients: pole at 0");
  std::vector<Rat> c(static_cast<size_t>(count), Rat(0));
  for (int i = 0; i < count; ++i) {
    Rat acc = f.num().coeff(i);
    for (int j = 1; j <= i; ++j) acc -= f.den().coeff(j) * c[static_cast<size_t>(i - j)];
    c[static_cast<size_t>(i)] = acc / d0;
  }
  return c;
}

}  // namespace wordchar
