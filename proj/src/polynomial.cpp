#include "surfsing/polynomial.hpp"
#include "surfsing/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace surfsing {

bool GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const auto dl = std::accumulate(lhs.begin(), lhs.end(), std::uint64_t{0});
  const auto dr = std::accumulate(rhs.begin(), rhs.end(), std::uint64_t{0});
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t k) {
  if (k < 1 || k > num_vars)
    throw DomainError("variable index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(num_vars));
  Exponents e(num_vars, 0);
  e[k - 1] = 1;
  return monomial(1, std::move(e));
}

Polynomial Polynomial::monomial(const Rational& c, Exponents exponents) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != num_vars_)
    throw DomainError("exponent vector of length " + std::to_string(e.size()) +
                      " in a polynomial of " + std::to_string(num_vars_) + " variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_arity(const Polynomial& rhs) const {
  if (rhs.num_vars_ != num_vars_)
    throw DomainError("polynomials in " + std::to_string(num_vars_) + " and " +
                      std::to_string(rhs.num_vars_) + " variables cannot be combined");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_arity(rhs);
  Polynomial out(lhs.num_vars_);
  Exponents e(lhs.num_vars_);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto degree = [](const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  };
  const auto d0 = degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& term) { return degree(term.first) == d0; });
}

Polynomial partial_derivative(const Polynomial& p, std::size_t k) {
  if (k < 1 || k > p.num_vars())
    throw DomainError("derivative index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(p.num_vars()));
  Polynomial out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k - 1] == 0) continue;
    Exponents d = e;
    --d[k - 1];
    out.add_term(d, c * e[k - 1]);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += vars;
    } else {
      out += to_string(magnitude) + "*" + vars;
    }
  }
  return out;
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := ('-' | '+') unary | power
// power  := atom ('^' integer)?
// atom   := number ('/' number)? | 'x' integer | '(' expr ')'
class Parser {
public:
  Parser(std::string_view text, std::size_t num_vars, const std::string& source, std::size_t line)
      : text_(text), num_vars_(num_vars), source_(source), line_(line) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw error("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size())
      throw error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  ParseError error(const std::string& msg) const { return {source_, line_, pos_ + 1, msg}; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt digits() {
    skip_space();
    const std::size_t start = pos_;
    BigInt value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      value = value * 10 + (text_[pos_++] - '0');
    if (pos_ == start) throw error("expected a number");
    return value;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw error("exponent must be a non-negative integer literal");
    const BigInt n = digits();
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))
      throw error("exponent must be a non-negative integer literal");
    if (n > 10000) throw error("exponent too large");
    return base.pow(static_cast<std::uint32_t>(n));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) throw error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw error("expected ')'");
      return inner;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw error("expected variable index after 'x'");
      const BigInt k = digits();
      if (k < 1 || k > num_vars_) {
        pos_ = at;
        throw error("variable index " + k.str() + " out of range x1..x" + std::to_string(num_vars_));
      }
      return Polynomial::variable(num_vars_, static_cast<std::size_t>(k));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const BigInt num = digits();
      if (pos_ < text_.size() && text_[pos_] == '.')
        throw error("decimal constants are not supported; write p/q");
      Rational value(num);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const BigInt den = digits();
        if (den == 0) throw error("zero denominator");
        value = Rational(num, den);
      }
      return Polynomial::constant(num_vars_, value);
    }
    throw error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t num_vars_;
  const std::string& source_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars, const std::string& source,
                            std::size_t line) {
  if (num_vars < 1) throw DomainError("number of variables must be at least 1");
  return Parser(text, num_vars, source, line).parse();
}

} // namespace surfsing
