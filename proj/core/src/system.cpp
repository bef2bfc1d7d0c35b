#include "torusrec/system.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "torusrec/errors.hpp"

namespace torusrec {

StatePoint wrap_angles(StatePoint m) {
  for (auto& a : m.angles) {
    a -= std::floor(a);
    if (a >= 1.0) a -= 1.0;
    if (a < 0.0) a = 0.0;
  }
  return m;
}

double state_distance(const StatePoint& a, const StatePoint& b) {
  double d = distance(a.g, b.g);
  for (std::size_t i = 0; i < a.angles.size(); ++i) {
    double w = std::fabs(a.angles[i] - b.angles[i]);
    w -= std::floor(w);
    d = std::max(d, std::min(w, 1.0 - w));
  }
  return d;
}

FourierSeries bracket_defect(const std::vector<double>& u, const FourierSeries& c,
                             const std::vector<double>& v, const FourierSeries& d) {
  return d.directional_derivative(u) - c.directional_derivative(v) + c.lie_product(d);
}

std::vector<HypothesisViolation> check_hypotheses(const SystemSpec& spec, double bracket_tol) {
  std::vector<HypothesisViolation> out;
  if (spec.k < 1) {
    out.push_back({"k must be at least 1", 0.0});
    return out;
  }
  if (spec.lifts.size() + 1 != spec.k) {
    std::ostringstream msg;
    msg << "expected " << spec.k - 1 << " lifts, got " << spec.lifts.size();
    out.push_back({msg.str(), 0.0});
  }
  std::set<std::size_t> dirs;
  for (const auto& lift : spec.lifts) {
    if (lift.direction < 1 || lift.direction > spec.k) {
      std::ostringstream msg;
      msg << "lift direction " << lift.direction << " out of range 1.." << spec.k;
      out.push_back({msg.str(), 0.0});
    } else if (!dirs.insert(lift.direction).second) {
      std::ostringstream msg;
      msg << "duplicate lift direction " << lift.direction;
      out.push_back({msg.str(), 0.0});
    }
  }
  if (!out.empty()) return out;  // structure broken, bracket checks meaningless

  if (spec.exact_mode && spec.omega.all_exact() && !is_nonresonant(spec.omega)) {
    out.push_back({"reduced frequencies are resonant", 0.0});
  }

  auto unit = [&](std::size_t direction) {
    std::vector<double> e(spec.k, 0.0);
    e[direction - 1] = 1.0;
    return e;
  };

  for (std::size_t i = 0; i < spec.lifts.size(); ++i)
    for (std::size_t j = i + 1; j < spec.lifts.size(); ++j) {
      double defect = bracket_defect(unit(spec.lifts[i].direction), spec.lifts[i].vertical,
                                     unit(spec.lifts[j].direction), spec.lifts[j].vertical)
                          .max_coeff_norm();
      if (defect > bracket_tol) {
        std::ostringstream msg;
        msg << "lifts S" << spec.lifts[i].direction << " and S" << spec.lifts[j].direction
            << " do not commute";
        out.push_back({msg.str(), defect});
      }
    }

  std::vector<double> omega = spec.omega.values();
  for (const auto& lift : spec.lifts) {
    double defect =
        bracket_defect(unit(lift.direction), lift.vertical, omega, spec.vertical)
            .max_coeff_norm();
    if (defect > bracket_tol) {
      std::ostringstream msg;
      msg << "lift S" << lift.direction << " is not a dynamical symmetry of X";
      out.push_back({msg.str(), defect});
    }
  }
  return out;
}

CompletedLifts complete_lifts(const SystemSpec& spec) {
  std::set<std::size_t> given;
  for (const auto& lift : spec.lifts) given.insert(lift.direction);
  std::size_t missing = 0;
  for (std::size_t d = 1; d <= spec.k; ++d)
    if (!given.count(d)) {
      missing = d;
      break;
    }
  if (missing == 0) throw std::invalid_argument("no lift direction left to complete");

  const FreqEntry& wm = spec.omega.entry(missing - 1);
  bool zero = wm.exact ? wm.exact->is_zero() : wm.value == 0.0;
  if (zero) {
    std::ostringstream msg;
    msg << "omega_" << missing << " = 0; the remaining lift cannot be completed";
    throw ZeroFrequency(msg.str());
  }

  CompletedLifts out;
  out.completed_direction = missing;
  out.vertical.assign(spec.k, FourierSeries(spec.k, spec.group, spec.group_dim));
  out.vertical_exact.assign(spec.k, std::nullopt);

  FourierSeries remainder = spec.vertical;
  for (const auto& lift : spec.lifts) {
    out.vertical[lift.direction - 1] = lift.vertical;
    out.vertical_exact[lift.direction - 1] = lift.vertical_exact;
    remainder = remainder - lift.vertical.scaled(spec.omega.value(lift.direction - 1));
  }
  out.vertical[missing - 1] = remainder.scaled(1.0 / wm.value);

  if (spec.exact_mode && spec.vertical_exact) {
    ExactSeries exact_rem = *spec.vertical_exact;
    for (const auto& lift : spec.lifts) {
      if (!lift.vertical_exact)
        throw std::domain_error("exact mode requires exact tables for every lift");
      const FreqEntry& wj = spec.omega.entry(lift.direction - 1);
      if (!wj.exact) throw std::domain_error("exact mode requires exact frequencies");
      exact_rem = exact_rem - lift.vertical_exact->scaled_exact(*wj.exact);
    }
    out.completed_remainder = std::move(exact_rem);
  }
  return out;
}

}  // namespace torusrec
