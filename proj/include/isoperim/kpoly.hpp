#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace isop {

// Polynomial in one variable k with exact integer coefficients. All arithmetic is
// overflow-checked; coefficients()[i] is the coefficient of k^i, with no trailing zeros.
class KPolynomial {
 public:
  KPolynomial() = default;
  KPolynomial(std::initializer_list<std::int64_t> coefficients);
  explicit KPolynomial(std::vector<std::int64_t> coefficients);

  static KPolynomial constant(std::int64_t c);
  // k + offset
  static KPolynomial shifted_k(std::int64_t offset);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  std::int64_t coefficient(std::size_t power) const noexcept;
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::int64_t evaluate(std::int64_t k) const;
  KPolynomial compose(const KPolynomial& inner) const;
  // Divides every coefficient by 2; DomainError if any is odd.
  KPolynomial halved() const;

  KPolynomial& operator+=(const KPolynomial& other);
  KPolynomial& operator-=(const KPolynomial& other);
  friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
  friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
  friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b);
  friend KPolynomial operator*(std::int64_t s, const KPolynomial& p);
  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

// p * (p - 1), i.e. twice the binomial coefficient C(p, 2), kept integral.
KPolynomial twice_binom2(const KPolynomial& p);

}  // namespace isop
