#pragma once

#include "surfsing/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace surfsing {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, larger monomials first: higher total degree
/// wins, ties broken lexicographically on (e_1, ..., e_N).
struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse polynomial in x1..xN with exact rational coefficients. No zero
/// coefficient is ever stored, so two equal polynomials compare equal.
class Polynomial {
public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  /// x_k, 1-based.
  static Polynomial variable(std::size_t num_vars, std::size_t k);
  static Polynomial monomial(const Rational& c, Exponents exponents);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of the given monomial (0 if absent).
  Rational coefficient(const Exponents& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  Polynomial pow(std::uint32_t n) const;

  /// True when every term has the same total degree (zero counts).
  bool is_homogeneous() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void require_same_arity(const Polynomial& rhs) const;

  std::size_t num_vars_;
  Terms terms_;
};

/// Formal partial derivative with respect to x_k (1-based). Throws
/// DomainError when k is out of range.
Polynomial partial_derivative(const Polynomial& p, std::size_t k);

/// Canonical rendering: terms in grlex order, `c*x1^2*x3`, coefficient 1
/// omitted, `0` for the zero polynomial.
std::string to_string(const Polynomial& p);

/// Parses sums of products of rational constants, variables x1..xN and
/// parenthesized groups, with `+ - * ^` and unary minus. Exponents must be
/// non-negative integer literals. Throws ParseError carrying the 1-based
/// column of the problem; `line` is threaded into the error for file input.
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars,
                            const std::string& source = "<input>", std::size_t line = 0);

} // namespace surfsing
