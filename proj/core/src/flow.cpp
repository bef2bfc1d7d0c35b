#include "torusrec/flow.hpp"

#include <cmath>
#include <sstream>

#include "torusrec/errors.hpp"

namespace torusrec {

FlowField field_of_motion(const SystemSpec& spec) {
  return FlowField{spec.omega.values(), spec.vertical};
}

FlowField field_of_lift(const SystemSpec& spec, const CompletedLifts& lifts,
                        std::size_t direction, double scale) {
  std::vector<double> u(spec.k, 0.0);
  u[direction - 1] = scale;
  return FlowField{std::move(u), lifts.vertical[direction - 1].scaled(scale)};
}

namespace {

// Truncated inverse-differential correction: A + [Omega, A]/2 +
// [Omega, [Omega, A]]/12 is enough for order 4 (the third-order Bernoulli
// term vanishes). For torus groups both brackets are zero and the scheme
// reduces to classical RK4 quadrature.
AlgebraVector dexpinv(const AlgebraVector& omega, const AlgebraVector& a) {
  AlgebraVector b1 = lie_bracket(omega, a);
  AlgebraVector b2 = lie_bracket(omega, b1);
  return a + b1.scaled(0.5) + b2.scaled(1.0 / 12.0);
}

}  // namespace

StatePoint flow(const FlowField& field, const StatePoint& m0, double t, double step) {
  if (step <= 0.0) throw std::invalid_argument("integrator step must be positive");
  const std::size_t k = m0.angles.size();

  StatePoint out = m0;
  for (std::size_t i = 0; i < k; ++i) out.angles[i] = m0.angles[i] + t * field.angle_rate[i];
  out = wrap_angles(std::move(out));

  if (field.vertical.empty() || t == 0.0) return out;

  const long nsteps = std::max(1L, std::lround(std::ceil(std::fabs(t) / step)));
  const double h = t / static_cast<double>(nsteps);

  // Angle evaluation along the unwrapped line phi0 + s*u; the series is
  // 1-periodic so wrapping is unnecessary.
  std::vector<double> phi(k);
  auto vertical_at = [&](double s) {
    for (std::size_t i = 0; i < k; ++i) phi[i] = m0.angles[i] + s * field.angle_rate[i];
    return field.vertical.eval(phi);
  };

  GroupElement g = m0.g;
  for (long n = 0; n < nsteps; ++n) {
    const double s0 = static_cast<double>(n) * h;
    AlgebraVector a1 = vertical_at(s0);
    AlgebraVector a2 = vertical_at(s0 + h / 2.0);
    AlgebraVector a4 = vertical_at(s0 + h);

    AlgebraVector k1 = a1;
    AlgebraVector k2 = dexpinv(k1.scaled(h / 2.0), a2);
    AlgebraVector k3 = dexpinv(k2.scaled(h / 2.0), a2);
    AlgebraVector k4 = dexpinv(k3.scaled(h), a4);
    AlgebraVector omega =
        (k1 + k2.scaled(2.0) + k3.scaled(2.0) + k4).scaled(h / 6.0);
    g = mul(g, exp_algebra(omega));
  }
  out.g = g;
  return out;
}

StatePoint flow_composition(const SystemSpec& spec, const CompletedLifts& lifts,
                            const std::vector<double>& alpha, const StatePoint& m0, double step,
                            double scale) {
  StatePoint m = m0;
  for (std::size_t d = 1; d <= spec.k; ++d)
    m = flow(field_of_lift(spec, lifts, d, scale), m, alpha[d - 1], step);
  return m;
}

GroupElement phase(const SystemSpec& spec, const CompletedLifts& lifts, std::size_t direction,
                   double step) {
  StatePoint end = flow(field_of_lift(spec, lifts, direction), spec.base_point, 1.0, step);
  for (std::size_t i = 0; i < spec.k; ++i) {
    double w = std::fabs(end.angles[i] - spec.base_point.angles[i]);
    w -= std::floor(w);
    if (std::min(w, 1.0 - w) > 1e-12) {
      std::ostringstream msg;
      msg << "angles did not close after one period of lift S" << direction;
      throw PeriodMismatch(msg.str());
    }
  }
  return mul(end.g, inverse(spec.base_point.g));
}

}  // namespace torusrec
