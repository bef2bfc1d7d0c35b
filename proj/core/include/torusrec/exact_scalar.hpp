#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torusrec/rational.hpp"

namespace torusrec {

/// Coefficient basis for exact frequency arithmetic. A run declares once a
/// tuple of real numbers (beta_0 = 1, beta_1, ..., beta_s) that are assumed
/// linearly independent over the rationals; that independence is a user
/// obligation and is not (and cannot be) verified here. Scalars are then
/// rational coefficient vectors over this basis, so integer relations between
/// them reduce to exact rational linear algebra.
struct ScalarBasis {
  std::vector<std::string> labels;  // labels[0] == "1"
  std::vector<double> values;       // values[0] == 1.0

  std::size_t size() const { return values.size(); }

  static std::shared_ptr<const ScalarBasis> rational_only();
  static std::shared_ptr<const ScalarBasis> make(std::vector<std::string> labels,
                                                 std::vector<double> values);
};

/// A real number sum_i q_i * beta_i with rational q_i over a shared
/// ScalarBasis. Supports the vector-space operations (addition, subtraction,
/// scaling by rationals) and float evaluation; general products are
/// deliberately not provided, the pipeline never needs them.
class ExactScalar {
 public:
  ExactScalar() = default;
  explicit ExactScalar(std::shared_ptr<const ScalarBasis> basis);  // zero
  ExactScalar(std::shared_ptr<const ScalarBasis> basis, std::vector<Rational> coeffs);

  static ExactScalar from_rational(std::shared_ptr<const ScalarBasis> basis,
                                   const Rational& q);

  const std::shared_ptr<const ScalarBasis>& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  double value() const { return value_; }
  bool is_zero() const;
  /// True when only the beta_0 = 1 coefficient is nonzero.
  bool is_rational() const;
  const Rational& rational_part() const { return coeffs_.at(0); }

  ExactScalar operator+(const ExactScalar& other) const;
  ExactScalar operator-(const ExactScalar& other) const;
  ExactScalar operator-() const;
  ExactScalar scaled(const Rational& factor) const;

  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);

  bool operator==(const ExactScalar& other) const;

  std::string to_string() const;  // e.g. "1/2 + 3/4*sqrt2"

 private:
  void refresh_value();
  void check_same_basis(const ExactScalar& other) const;

  std::shared_ptr<const ScalarBasis> basis_;
  std::vector<Rational> coeffs_;
  double value_ = 0.0;
};

}  // namespace torusrec
