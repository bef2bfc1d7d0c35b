#pragma once

#include "torusrec/system.hpp"

namespace torusrec {

/// A field u.dphi + g * vertical(phi) with constant angle rates.
struct FlowField {
  std::vector<double> angle_rate;
  FourierSeries vertical;
};

FlowField field_of_motion(const SystemSpec& spec);
FlowField field_of_lift(const SystemSpec& spec, const CompletedLifts& lifts,
                        std::size_t direction, double scale = 1.0);

/// Time-t map. Angles advance exactly (phi + t*u mod 1); the group part is
/// integrated with a fixed-step 4th-order Lie-group Runge-Kutta (algebra
/// stages with truncated dexpinv corrections, exponential update).
/// Deterministic for a fixed step.
StatePoint flow(const FlowField& field, const StatePoint& m0, double t, double step = 1e-3);

/// Composition flow_{S_1}(alpha_1) o ... o flow_{S_k}(alpha_k) from m0,
/// optionally with every lift scaled by `scale`.
StatePoint flow_composition(const SystemSpec& spec, const CompletedLifts& lifts,
                            const std::vector<double>& alpha, const StatePoint& m0,
                            double step = 1e-3, double scale = 1.0);

/// Group element gamma with flow_{S_i}(1)(m) = gamma . m, computed by
/// integrating the lift over one reduced period. Throws PeriodMismatch when
/// the angles fail to close.
GroupElement phase(const SystemSpec& spec, const CompletedLifts& lifts, std::size_t direction,
                   double step = 1e-3);

}  // namespace torusrec
