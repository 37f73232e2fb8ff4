#include "isoperim/kpoly.hpp"

#include "isoperim/errors.hpp"
#include "isoperim/exact.hpp"

namespace isop {

KPolynomial::KPolynomial(std::initializer_list<std::int64_t> coefficients) : coeffs_(coefficients) { trim(); }

KPolynomial::KPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

KPolynomial KPolynomial::constant(std::int64_t c) { return KPolynomial{c}; }

KPolynomial KPolynomial::shifted_k(std::int64_t offset) { return KPolynomial{offset, 1}; }

std::int64_t KPolynomial::coefficient(std::size_t power) const noexcept {
  return power < coeffs_.size() ? coeffs_[power] : 0;
}

void KPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t KPolynomial::evaluate(std::int64_t k) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, k), *it);
  return acc;
}

KPolynomial KPolynomial::compose(const KPolynomial& inner) const {
  KPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

KPolynomial KPolynomial::halved() const {
  std::vector<std::int64_t> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] % 2 != 0) throw DomainError("KPolynomial::halved: odd coefficient in " + to_string());
    out[i] = coeffs_[i] / 2;
  }
  return KPolynomial(std::move(out));
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return KPolynomial(std::move(out));
}

KPolynomial operator*(std::int64_t s, const KPolynomial& p) { return KPolynomial::constant(s) * p; }

std::string KPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || i == 0) s += std::to_string(mag);
    if (i >= 1) s += "k";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

KPolynomial twice_binom2(const KPolynomial& p) { return p * (p - KPolynomial::constant(1)); }

}  // namespace isop
