#include "akmove/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "akmove/error.hpp"

namespace akmove {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Validity: return "validity";
    case ErrorKind::Site: return "site";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::Budget: return "budget";
  }
  return "unknown";
}

LaurentPoly LaurentPoly::constant(std::int64_t c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<std::int64_t>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::vector<std::int64_t> LaurentPoly::coefficients() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(degree() + 1), 0);
  for (auto [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e >= 1) os << "z";
    if (e >= 2) os << "^" << e;
  }
  return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(std::int64_t k) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.add_term(e, c * k);
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return *this * -1; }

LaurentPoly LaurentPoly::times_z() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace(e + 1, c);
  return r;
}

LaurentPoly LaurentPoly::negate_variable() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace(e, (e % 2) ? -c : c);
  return r;
}

}  // namespace akmove
