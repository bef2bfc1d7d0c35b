#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torusrec/exact_scalar.hpp"
#include "torusrec/group.hpp"

namespace torusrec {

/// Finite trigonometric series b : T^k -> g,
///
///   b(phi) = sum_n [ cos(2 pi n.phi) * C_n + sin(2 pi n.phi) * S_n ]
///
/// over integer multi-indices n with algebra-valued coefficients. Terms are
/// stored on canonical representatives of {n, -n} (first nonzero component
/// of n positive; the n = 0 term has no sine part), so all series arithmetic
/// is closed and truncation-free.
class FourierSeries {
 public:
  FourierSeries() = default;
  FourierSeries(std::size_t angle_count, GroupId group, std::size_t group_dim);

  std::size_t angle_count() const { return angle_count_; }
  GroupId group() const { return group_; }
  std::size_t algebra_dim() const { return alg_dim_; }

  /// Accumulates cos(2 pi n.phi)*c + sin(2 pi n.phi)*s into the series.
  void add_term(std::vector<int> n, const AlgebraVector& c, const AlgebraVector& s);

  AlgebraVector eval(const std::vector<double>& phi) const;

  /// Series of t -> d/dt b(phi + t u) at t = 0, i.e. (u . grad) b.
  FourierSeries directional_derivative(const std::vector<double>& u) const;

  /// Pointwise Lie bracket phi -> [ a(phi), b(phi) ]. Identically zero for
  /// torus groups.
  FourierSeries lie_product(const FourierSeries& other) const;

  FourierSeries operator+(const FourierSeries& other) const;
  FourierSeries operator-(const FourierSeries& other) const;
  FourierSeries scaled(double f) const;

  /// integral_0^1 b(base + t e_i) dt. Only terms with n_i = 0 survive a full
  /// period.
  AlgebraVector period_integral(std::size_t direction, const std::vector<double>& base) const;

  double max_coeff_norm() const;
  bool empty() const { return terms_.empty(); }

  struct Term {
    std::vector<int> n;
    AlgebraVector cos_coeff;
    AlgebraVector sin_coeff;
  };
  const std::map<std::vector<int>, std::pair<AlgebraVector, AlgebraVector>>& terms() const {
    return terms_;
  }

 private:
  void check_compatible(const FourierSeries& other) const;

  std::size_t angle_count_ = 0;
  GroupId group_ = GroupId::Torus;
  std::size_t alg_dim_ = 0;
  std::map<std::vector<int>, std::pair<AlgebraVector, AlgebraVector>> terms_;
};

/// Exact counterpart of a FourierSeries for the certified pipeline. The
/// coefficients are coordinates along the phase torus in turn units: all d
/// coordinates for a torus group, the single coordinate along the shared
/// rotation axis for SO(3). Entries are ExactScalars; series built from user
/// input carry plain rationals, and frequency-scaled combinations stay exact
/// because scaling is only ever applied to rational entries.
class ExactSeries {
 public:
  ExactSeries() = default;
  ExactSeries(std::size_t angle_count, std::size_t coord_dim,
              std::shared_ptr<const ScalarBasis> basis);

  std::size_t angle_count() const { return angle_count_; }
  std::size_t coord_dim() const { return coord_dim_; }
  const std::shared_ptr<const ScalarBasis>& basis() const { return basis_; }

  void add_term(std::vector<int> n, std::vector<ExactScalar> c, std::vector<ExactScalar> s);

  ExactSeries operator-(const ExactSeries& other) const;
  /// Throws if some entry is not rational (see class comment).
  ExactSeries scaled_exact(const ExactScalar& factor) const;

  bool all_entries_rational() const;

  /// Exact integral_0^1 over direction i from rational base angles. The trig
  /// weights cos/sin(2 pi n.base) of the surviving terms must be exactly
  /// representable, i.e. n.base must be a multiple of 1/4; otherwise throws
  /// std::domain_error (callers fall back to numeric mode).
  std::vector<ExactScalar> period_integral_exact(std::size_t direction,
                                                 const std::vector<Rational>& base) const;

  const std::map<std::vector<int>,
                 std::pair<std::vector<ExactScalar>, std::vector<ExactScalar>>>&
  terms() const {
    return terms_;
  }

 private:
  std::size_t angle_count_ = 0;
  std::size_t coord_dim_ = 0;
  std::shared_ptr<const ScalarBasis> basis_;
  std::map<std::vector<int>, std::pair<std::vector<ExactScalar>, std::vector<ExactScalar>>>
      terms_;
};

}  // namespace torusrec
