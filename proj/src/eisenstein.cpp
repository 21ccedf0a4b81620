#include "pcentral/eisenstein.hpp"

#include <cctype>
#include <sstream>

#include "pcentral/errors.hpp"

namespace pcentral {

EisensteinInt EisensteinInt::operator*(const EisensteinInt& o) const {
  // (a + b r)(c + d r) = ac + (ad + bc) r + bd r^2, with r^2 = -1 - r.
  mpz_class bd = b * o.b;
  return {a * o.a - bd, a * o.b + b * o.a - bd};
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a += o.a;
  b += o.b;
  return *this;
}

EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) { return *this = *this * o; }

EisensteinInt EisensteinInt::pow(unsigned e) const {
  EisensteinInt result(1);
  EisensteinInt base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string EisensteinInt::to_string() const {
  std::ostringstream os;
  os << a.get_str() << (b < 0 ? "-" : "+") << mpz_class(abs(b)).get_str() << "*r";
  return os.str();
}

mpz_class eis_norm(const EisensteinInt& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

CycloNum to_cyclo(const EisensteinInt& x) {
  return CycloNum::from_coeffs(3, {mpq_class(x.a), mpq_class(x.b)});
}

namespace {

mpz_class parse_integer(const std::string& digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("bad Eisenstein literal '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("bad Eisenstein literal '" + std::string(whole) + "'");
    }
  }
  return mpz_class(digits, 10);
}

}  // namespace

EisensteinInt parse_eisenstein(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty Eisenstein literal");

  EisensteinInt result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("bad Eisenstein literal '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;

    bool is_rho = false;
    if (!term.empty() && term.back() == 'r') {
      is_rho = true;
      term.pop_back();
      if (!term.empty()) {
        if (term.back() != '*') throw ParseError("bad Eisenstein literal '" + std::string(text) + "'");
        term.pop_back();
        if (term.empty()) throw ParseError("bad Eisenstein literal '" + std::string(text) + "'");
      } else {
        term = "1";
      }
    }
    mpz_class value = parse_integer(term, text) * sign;
    if (is_rho) {
      result.b += value;
    } else {
      result.a += value;
    }
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) { return os << x.to_string(); }

}  // namespace pcentral
