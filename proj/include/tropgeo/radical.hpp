#pragma once

#include "tropgeo/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace tropgeo {

/// Exact value of the form coef * sqrt(radicand), radicand a nonnegative
/// integer kept square-free by construction. Closed under multiplication and
/// division; addition is only defined between values over the same radicand.
/// This is enough to carry every irrational quantity the geometry produces
/// (facet areas with sqrt(2), central sections with sqrt(k), Jacobians with
/// sqrt(a^2+b^2+c^2)) so that products like (n/sqrt(k)) * sqrt(k) reduce to
/// exact rationals.
struct Radical {
  Rational coef{0};
  Int radicand{1};

  Radical() = default;
  Radical(Rational c) : coef(std::move(c)), radicand(1) {}
  Radical(Rational c, Int m) : coef(std::move(c)), radicand(std::move(m)) { normalize(); }

  void normalize() {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    if (coef == 0 || radicand == 0) {
      coef = 0;
      radicand = 1;
      return;
    }
    // pull square divisors out of the radicand
    Int m = radicand, sq = 1;
    for (Int d = 2; d * d <= m; ++d) {
      while (m % (d * d) == 0) {
        m /= d * d;
        sq *= d;
      }
    }
    radicand = m;
    coef *= Rational(sq);
  }

  bool is_rational() const { return radicand == 1 || coef == 0; }

  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("radical is irrational");
    return coef;
  }

  /// coef^2 * radicand — always an exact rational.
  Rational squared() const { return coef * coef * Rational(radicand); }

  double value() const {
    return to_double(coef) * std::sqrt(static_cast<double>(Int(radicand)));
  }

  friend Radical operator*(const Radical& a, const Radical& b) {
    return Radical(a.coef * b.coef, a.radicand * b.radicand);
  }
  friend Radical operator*(const Rational& s, const Radical& b) {
    return Radical(s * b.coef, b.radicand);
  }
  friend Radical operator/(const Radical& a, const Radical& b) {
    if (b.coef == 0) throw std::invalid_argument("division by zero radical");
    // a / (c sqrt(m)) = a * sqrt(m) / (c m)
    return a * Radical(Rational(1) / (b.coef * Rational(b.radicand)), b.radicand);
  }
  friend Radical operator+(const Radical& a, const Radical& b) {
    if (a.coef == 0) return b;
    if (b.coef == 0) return a;
    if (a.radicand != b.radicand)
      throw std::logic_error("radical addition over distinct radicands");
    return Radical(a.coef + b.coef, a.radicand);
  }
  friend bool operator==(const Radical& a, const Radical& b) {
    return a.coef == b.coef && (a.coef == 0 || a.radicand == b.radicand);
  }
};

}  // namespace tropgeo
