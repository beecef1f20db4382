#include "tpoly/polynomial.hpp"

#include <cctype>
#include <ostream>

namespace tpoly {

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(Integer coefficient, Monomial m) {
  if (coefficient != 0) terms_.emplace(m, std::move(coefficient));
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::max_abs_coefficient() const {
  Integer best = 0;
  for (const auto& [m, c] : terms_) {
    Integer a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::negate_t() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(m, (m.deg_t % 2 == 1) ? Integer(-c) : c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      out.add_term({mp.deg_s + mq.deg_s, mp.deg_t + mq.deg_t, mp.deg_x + mq.deg_x},
                   cp * cq);
    }
  }
  return out;
}

Polynomial operator-(Polynomial p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

namespace {

void append_factor(std::string& out, bool& first, char var, std::uint32_t deg) {
  if (deg == 0) return;
  if (!first) out += '*';
  first = false;
  out += var;
  if (deg > 1) {
    out += '^';
    out += std::to_string(deg);
  }
}

}  // namespace

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (leading) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    leading = false;

    const Integer mag = negative ? Integer(-c) : c;
    const bool constant = m == Monomial{};
    bool first = true;
    if (mag != 1 || constant) {
      out += mag.str();
      first = false;
    }
    append_factor(out, first, 's', m.deg_s);
    append_factor(out, first, 't', m.deg_t);
    append_factor(out, first, 'x', m.deg_x);
  }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial run() {
    Polynomial result;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    accumulate(result, parse_term(), negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      accumulate(result, parse_term(), op == '-');
    }
    return result;
  }

private:
  struct Term {
    Integer coeff = 1;
    Monomial mono;
  };

  static void accumulate(Polynomial& p, const Term& t, bool negative) {
    p.add_term(t.mono, negative ? Integer(-t.coeff) : t.coeff);
  }

  Term parse_term() {
    skip_ws();
    Term term;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_integer();
      skip_ws();
      if (peek() != '*') return term;
      ++pos_;
    }
    parse_factor(term.mono);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(term.mono);
    }
    return term;
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    char var = peek();
    std::uint32_t* slot = nullptr;
    switch (var) {
      case 's': slot = &mono.deg_s; break;
      case 't': slot = &mono.deg_t; break;
      case 'x': slot = &mono.deg_x; break;
      default: fail("expected variable s, t or x");
    }
    ++pos_;
    std::uint32_t exp = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      Integer e = parse_integer();
      if (e > 1'000'000) fail("exponent too large");
      exp = e.convert_to<std::uint32_t>();
    }
    *slot += exp;
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_text(); }

StateSumAccumulator::StateSumAccumulator(std::size_t max_s, std::size_t max_t,
                                         std::size_t max_x)
    : ds_(max_s + 1), dt_(max_t + 1), dx_(max_x + 1), cells_(ds_ * dt_ * dx_, 0) {}

void StateSumAccumulator::add(std::size_t deg_s, std::size_t deg_t, std::size_t deg_x,
                              std::int64_t c) {
  cells_.at((deg_s * dt_ + deg_t) * dx_ + deg_x) += c;
}

Polynomial StateSumAccumulator::finish() const {
  Polynomial out;
  for (std::size_t i = 0; i < ds_; ++i)
    for (std::size_t j = 0; j < dt_; ++j)
      for (std::size_t k = 0; k < dx_; ++k) {
        std::int64_t c = cells_[(i * dt_ + j) * dx_ + k];
        if (c != 0)
          out.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                        static_cast<std::uint32_t>(k)},
                       c);
      }
  return out;
}

}  // namespace tpoly
