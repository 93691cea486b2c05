#pragma once

#include <string>
#include <vector>

#include "wordchar/polynomial.hpp"

namespace wordchar {

/// Ratio of two exact polynomials, kept reduced: numerator and denominator
/// are coprime and the denominator is monic. The zero function is 0/1 and
/// propagates through all operations.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rat(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Rat& c) : num_(Polynomial(c)), den_(Rat(1)) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// deg(den) - deg(num); order of vanishing at infinity. Unbounded for the
  /// zero function, reported as a large sentinel.
  int degree_gap() const;

  Rat evaluate(const Rat& x) const;
  RationalFunction derivative() const;

  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string(const std::string& var = "n") const;

private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

/// g with g(x) = f(1/x), reduced. Involutive where defined.
RationalFunction reciprocal_substitute(const RationalFunction& f);

/// First `count` Maclaurin coefficients of f, by exact power-series
/// division. Requires den(0) != 0.
std::vector<Rat> taylor_coefficients(const RationalFunction& f, int count);

}  // namespace wordchar
