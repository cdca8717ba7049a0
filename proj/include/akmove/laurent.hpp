#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace akmove {

// Integer polynomial in z. Only nonzero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c);
  static LaurentPoly monomial(std::int64_t c, int exponent);
  static LaurentPoly from_coefficients(const std::vector<std::int64_t>& coeffs);

  std::int64_t coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  // Dense coefficient list c0, c1, ..., c_degree.
  std::vector<std::int64_t> coefficients() const;
  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(std::int64_t k) const;
  LaurentPoly operator-() const;
  LaurentPoly times_z() const;
  // p(-z)
  LaurentPoly negate_variable() const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

 private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

}  // namespace akmove
