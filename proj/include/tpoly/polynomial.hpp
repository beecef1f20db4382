#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tpoly {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial s^deg_s * t^deg_t * x^deg_x.
struct Monomial {
  std::uint32_t deg_s = 0;
  std::uint32_t deg_t = 0;
  std::uint32_t deg_x = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Thrown by Polynomial::parse; position() is the byte offset of the fault.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Sparse polynomial in s, t, x with arbitrary-precision integer coefficients.
///
/// Terms are kept in canonical form: no stored coefficient is zero and the
/// monomials are ordered descending lexicographically by (deg_s, deg_t, deg_x),
/// which is also the order used by to_text().
class Polynomial {
public:
  using TermMap = std::map<Monomial, Integer, std::greater<Monomial>>;

  Polynomial() = default;
  explicit Polynomial(Integer constant);
  Polynomial(Integer coefficient, Monomial m);

  static Polynomial s() { return {1, {1, 0, 0}}; }
  static Polynomial t() { return {1, {0, 1, 0}}; }
  static Polynomial x() { return {1, {0, 0, 1}}; }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;

  /// Largest absolute coefficient; zero for the zero polynomial.
  Integer max_abs_coefficient() const;

  /// Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  /// Image under the ring map t -> -t.
  Polynomial negate_t() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(Polynomial p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text, e.g. "s + t*x - t"; the zero polynomial prints as "0".
  std::string to_text() const;

  /// Parses the text grammar
  ///   poly   := ['-'] term (('+'|'-') term)*
  ///   term   := coeff | [coeff '*'] factor ('*' factor)*
  ///   factor := ('s'|'t'|'x') ['^' int]
  /// Whitespace is insignificant.
  static Polynomial parse(std::string_view text);

private:
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Accumulator for state sums: terms s^i t^j x^k with machine-word
/// coefficients, converted once into a Polynomial at the end.
class StateSumAccumulator {
public:
  StateSumAccumulator(std::size_t max_s, std::size_t max_t, std::size_t max_x);

  void add(std::size_t deg_s, std::size_t deg_t, std::size_t deg_x, std::int64_t c);
  Polynomial finish() const;

private:
  std::size_t ds_, dt_, dx_;
  std::vector<std::int64_t> cells_;
};

}  // namespace tpoly
