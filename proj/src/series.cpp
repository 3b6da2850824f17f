#include "padyn/series.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "padyn/error.hpp"

namespace padyn {

Rational TruncatedSeries::coefficient(int j) const {
  if (j == 0) return 1;
  if (j < 0 || j > truncation_order()) return 0;
  return coefficients[static_cast<std::size_t>(j - 1)];
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Parses one monomial "c", "c*x", "x^k", "c*x^k", "c/d*x^k" (no sign).
std::pair<int, Rational> parse_monomial(const std::string& term, std::string_view literal) {
  auto bad = [&] { fail(ErrorCode::ParseError, "bad series term '" + term + "' in '" + std::string(literal) + "'"); };
  if (term.empty()) bad();
  auto xpos = term.find('x');
  if (xpos == std::string::npos) return {0, parse_rational(term)};
  Rational c = 1;
  if (xpos > 0) {
    if (term[xpos - 1] != '*') bad();
    c = parse_rational(term.substr(0, xpos - 1));
  }
  std::string rest = term.substr(xpos + 1);
  int degree = 1;
  if (!rest.empty()) {
    if (rest[0] != '^' || rest.size() < 2) bad();
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(rest[i]))) bad();
    degree = std::stoi(rest.substr(1));
  }
  return {degree, c};
}

}  // namespace

TruncatedSeries TruncatedSeries::parse(std::string_view literal, long prime) {
  std::string s = strip_spaces(literal);
  const std::string head = "x^3*(";
  if (s.rfind(head, 0) != 0 || s.back() != ')')
    fail(ErrorCode::ParseError, "series literal must look like x^3*(1 + ...): '" + std::string(literal) + "'");
  std::string body = s.substr(head.size(), s.size() - head.size() - 1);
  std::map<int, Rational> terms;
  std::size_t i = 0;
  while (i < body.size()) {
    int sign = 1;
    if (body[i] == '+' || body[i] == '-') {
      sign = body[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
    auto [degree, c] = parse_monomial(body.substr(i, j - i), literal);
    terms[degree] += sign * c;
    i = j;
  }
  if (terms[0] != 1)
    fail(ErrorCode::ParseError, "unit factor must have constant term 1: '" + std::string(literal) + "'");
  TruncatedSeries out;
  out.prime = prime;
  int order = terms.rbegin()->first;
  out.coefficients.assign(static_cast<std::size_t>(order), Rational(0));
  for (auto& [d, c] : terms)
    if (d > 0) out.coefficients[static_cast<std::size_t>(d - 1)] = c;
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  out << "x^3*(1";
  for (int j = 1; j <= truncation_order(); ++j) {
    const Rational& c = coefficients[static_cast<std::size_t>(j - 1)];
    if (c == 0) continue;
    out << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str() << "*x";
    if (j > 1) out << "^" << j;
  }
  out << ")";
  return out.str();
}

PadicNumber evaluate(const TruncatedSeries& u, const PadicNumber& x) {
  if (u.prime != 0 && u.prime != x.prime())
    fail(ErrorCode::DomainError, "series bound to p=" + std::to_string(u.prime) + " evaluated over p=" + std::to_string(x.prime()));
  if (x.is_zero()) return x;
  if (x.valuation() < 1)
    fail(ErrorCode::OutOfDomain, "series evaluation needs v(x) >= 1, got " + std::to_string(x.valuation()));
  const long p = x.prime();
  const int n = x.precision();
  for (const auto& c : u.coefficients)
    if (c != 0 && valuation(c, Integer(p)) < 0)
      fail(ErrorCode::NonIntegralCoefficient, "coefficient " + c.get_str() + " is not p-integral");
  // Horner on the unit factor: 1 + x(A_1 + x(A_2 + ...)).
  PadicNumber acc = PadicNumber::zero(p, n);
  for (int j = u.truncation_order(); j >= 1; --j) {
    PadicNumber a = PadicNumber::from_rational(u.coefficient(j), p, n);
    acc = a + x * acc;
  }
  PadicNumber unit_factor = PadicNumber::from_integer(1, p, n) + x * acc;
  return x * x * x * unit_factor;
}

OrbitRecord iterate(const TruncatedSeries& u, const PadicNumber& seed, int steps) {
  if (steps < 0) fail(ErrorCode::DomainError, "steps must be nonnegative");
  if (!seed.is_zero() && seed.valuation() < 1)
    fail(ErrorCode::OutOfDomain, "orbit seed must lie in pZ_p");
  OrbitRecord rec{seed, {seed}, {seed.valuation()}};
  for (int k = 0; k < steps; ++k) {
    rec.iterates.push_back(evaluate(u, rec.iterates.back()));
    rec.valuations.push_back(rec.iterates.back().valuation());
  }
  return rec;
}

bool vn_membership(const TruncatedSeries& u, const PadicNumber& x, int n) {
  if (x.is_zero()) return false;
  return evaluate(u, x).valuation() == n;
}

}  // namespace padyn
