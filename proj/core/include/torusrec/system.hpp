#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torusrec/fourier.hpp"
#include "torusrec/freqs.hpp"
#include "torusrec/group.hpp"

namespace torusrec {

/// Point of the total space T^k x G.
struct StatePoint {
  std::vector<double> angles;  // reduced to [0,1)
  GroupElement g = GroupElement::torus({});
};

StatePoint wrap_angles(StatePoint m);
double state_distance(const StatePoint& a, const StatePoint& b);

/// Declared lift S = d/dphi_i + g * vertical(phi) of the i-th reduced
/// generator.
struct LiftInput {
  std::size_t direction = 1;  // 1-based
  FourierSeries vertical;
  std::optional<ExactSeries> vertical_exact;
};

/// The invariant field X = sum_j omega_j d/dphi_j + g * vertical(phi) on
/// T^k x G, together with the k-1 declared lifts and the base point. Fields
/// of this class are G-invariant by construction, which keeps the
/// commutation hypotheses a finite symbolic computation on the series.
///
/// Immutable after construction; every operation on it is a pure function.
struct SystemSpec {
  GroupId group = GroupId::Torus;
  std::size_t group_dim = 1;  // torus groups: d; so3: 3
  std::size_t k = 1;
  FrequencyVector omega;
  FourierSeries vertical;
  std::optional<ExactSeries> vertical_exact;
  std::vector<LiftInput> lifts;
  StatePoint base_point;
  std::vector<Rational> base_angles_exact;  // exact mode only
  bool exact_mode = false;
  /// Shared rotation axis of all so(3) Fourier data (exact mode).
  std::array<double, 3> so3_axis = {0.0, 0.0, 1.0};
  bool has_so3_axis = false;
  std::shared_ptr<const ScalarBasis> scalar_basis;

  std::size_t rank() const { return group_rank(group, group_dim); }
  GroupElement group_identity() const { return GroupElement::identity(group, group_dim); }
};

/// Vertical part of the commutator of Y = u.dphi + g*c(phi) and
/// Z = v.dphi + g*d(phi); the horizontal part vanishes for constant u, v.
/// The bracket is zero iff the returned series is zero.
FourierSeries bracket_defect(const std::vector<double>& u, const FourierSeries& c,
                             const std::vector<double>& v, const FourierSeries& d);

struct HypothesisViolation {
  std::string what;
  double defect_norm = 0.0;
};

/// Structural checks plus the symbolic commutation checks: every declared
/// lift against every other and against X. Empty result means the
/// reconstruction hypotheses hold.
std::vector<HypothesisViolation> check_hypotheses(const SystemSpec& spec,
                                                  double bracket_tol = 1e-12);

/// All k lift vertical parts, the missing one filled in from
/// (X - sum_j omega_j S_j) / omega_m.
struct CompletedLifts {
  std::vector<FourierSeries> vertical;  // index = direction - 1
  std::size_t completed_direction = 1;  // 1-based
  /// Exact remainder a - sum_j omega_j b_j over the j the user declared;
  /// the division by omega_m is kept symbolic so downstream sums stay exact.
  std::optional<ExactSeries> completed_remainder;
  std::vector<std::optional<ExactSeries>> vertical_exact;  // completed slot empty
};

CompletedLifts complete_lifts(const SystemSpec& spec);

}  // namespace torusrec
