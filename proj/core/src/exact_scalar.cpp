#include "torusrec/exact_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace torusrec {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  q.canonicalize();
  if (q.get_den() <= 0) throw std::invalid_argument("bad rational literal: '" + text + "'");
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt round_nearest(const Rational& q) {
  Rational shifted = q + Rational(1, 2);
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return out;
}

std::shared_ptr<const ScalarBasis> ScalarBasis::rational_only() {
  return make({"1"}, {1.0});
}

std::shared_ptr<const ScalarBasis> ScalarBasis::make(std::vector<std::string> labels,
                                                     std::vector<double> values) {
  if (values.empty() || values[0] != 1.0)
    throw std::invalid_argument("scalar basis must start with 1");
  if (labels.size() != values.size())
    throw std::invalid_argument("scalar basis labels/values length mismatch");
  auto basis = std::make_shared<ScalarBasis>();
  basis->labels = std::move(labels);
  basis->values = std::move(values);
  return basis;
}

ExactScalar::ExactScalar(std::shared_ptr<const ScalarBasis> basis)
    : basis_(std::move(basis)), coeffs_(basis_->size(), Rational(0)) {}

ExactScalar::ExactScalar(std::shared_ptr<const ScalarBasis> basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size())
    throw std::invalid_argument("coefficient count does not match basis size");
  refresh_value();
}

ExactScalar ExactScalar::from_rational(std::shared_ptr<const ScalarBasis> basis,
                                       const Rational& q) {
  std::vector<Rational> coeffs(basis->size(), Rational(0));
  coeffs[0] = q;
  return ExactScalar(std::move(basis), std::move(coeffs));
}

bool ExactScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool ExactScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void ExactScalar::check_same_basis(const ExactScalar& other) const {
  if (basis_ == other.basis_) return;
  if (basis_ && other.basis_ && basis_->values == other.basis_->values) return;
  throw std::invalid_argument("exact scalars over different bases");
}

ExactScalar ExactScalar::operator+(const ExactScalar& other) const {
  ExactScalar out = *this;
  out += other;
  return out;
}

ExactScalar ExactScalar::operator-(const ExactScalar& other) const {
  ExactScalar out = *this;
  out -= other;
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  out.refresh_value();
  return out;
}

ExactScalar ExactScalar::scaled(const Rational& factor) const {
  ExactScalar out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  out.refresh_value();
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  check_same_basis(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  refresh_value();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  check_same_basis(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  refresh_value();
  return *this;
}

bool ExactScalar::operator==(const ExactScalar& other) const {
  check_same_basis(other);
  return coeffs_ == other.coeffs_;
}

void ExactScalar::refresh_value() {
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    acc += coeffs_[i].get_d() * basis_->values[i];
  value_ = acc;
}

std::string ExactScalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << coeffs_[i].get_str();
    if (i > 0) out << "*" << basis_->labels[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace torusrec
