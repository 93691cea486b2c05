#pragma once

#include <string>
#include <vector>

#include "wordchar/numbers.hpp"

namespace wordchar {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. Canonical form never stores a trailing zero coefficient; the zero
/// polynomial is the empty coefficient list (degree -1 by convention).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Rat constant);
  explicit Polynomial(std::vector<Rat> coeffs);
  static Polynomial monomial(int degree, Rat coeff = Rat(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading_coeff() const;

  Rat evaluate(const Rat& x) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial scaled(const Rat& c) const;
  /// Self with every coefficient divided by the leading one.
  Polynomial monic() const;
  /// Coefficients reversed relative to `degree` slots: x^degree * p(1/x).
  Polynomial reversed(int degree) const;

  /// Rendering in the engine variable, e.g. "n^2 - 3*n + 1".
  std::string to_string(const std::string& var = "n") const;

private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder of exact long division (d nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& d);
/// True iff d divides f exactly (d nonzero).
bool divides(const Polynomial& d, const Polynomial& f);
/// Monic greatest common divisor (Euclid over Q[x]).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// prod_{c=0}^{m-1} (x - c); monic of degree m, empty product for m = 0.
Polynomial falling_factorial(int m);

/// prod_{c=1}^{K*L} (1-cx)^L * [prod_{j=1}^{2K} (1-(j-1)x)]^L.
/// The j = 1 factor is constant, so the degree is K*L^2 + L*(2K-1).
Polynomial gate_polynomial(int L, int K);

}  // namespace wordchar
