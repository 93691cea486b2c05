#include "wordchar/polynomial.hpp"

#include <sstream>

namespace wordchar {

Polynomial::Polynomial(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, Rat coeff) {
  if (coeff == 0) return {};
  std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rat Polynomial::leading_coeff() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat Polynomial::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d;
  d.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rat& s) const {
  if (s == 0) return {};
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
  return scaled(Rat(1) / leading_coeff());
}

Polynomial Polynomial::reversed(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("reversed: degree too small");
  std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<size_t>(degree) - i] = coeffs_[i];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (i == 0 || a != 1) {
      os << rat_to_string(a);
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Rat> rem(f.coeffs());
  const int dd = d.degree();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd < dd) return {Polynomial(), f};
  std::vector<Rat> quot(static_cast<size_t>(rd - dd) + 1, Rat(0));
  const Rat lead = d.leading_coeff();
  for (int i = rd; i >= dd; --i) {
    Rat q = rem[static_cast<size_t>(i)] / lead;
    if (q == 0) continue;
    quot[static_cast<size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= q * d.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& d, const Polynomial& f) {
  return divmod(f, d).second.is_zero();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Polynomial falling_factorial(int m) {
  if (m < 0) throw std::invalid_argument("falling_factorial: negative m");
  Polynomial p(Rat(1));
  for (int c = 0; c < m; ++c)
    p *= Polynomial({Rat(-c), Rat(1)});
  return p;
}

Polynomial gate_polynomial(int L, int K) {
  if (L < 1 || K < 1) throw std::invalid_argument("gate_polynomial: L,K must be >= 1");
  Polynomial g(Rat(1));
  for (int c = 1; c <= K * L; ++c) {
    Polynomial f({Rat(1), Rat(-c)});
    for (int rep = 0; rep < L; ++rep) g *= f;
  }
  Polynomial inner(Rat(1));
  for (int j = 1; j <= 2 * K; ++j) inner *= Polynomial({Rat(1), Rat(-(j - 1))});
  for (int rep = 0; rep < L; ++rep) g *= inner;
  return g;
}

}  // namespace wordchar
