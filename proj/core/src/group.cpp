#include "torusrec/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace torusrec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap01(double x) {
  double y = x - std::floor(x);
  if (y >= 1.0) y -= 1.0;  // e.g. x = -1e-18 rounds up to 1.0
  if (y < 0.0) y = 0.0;
  return y;
}

double circle_dist(double a, double b) {
  double d = std::fabs(wrap01(a) - wrap01(b));
  return std::min(d, 1.0 - d);
}

}  // namespace

std::string group_name(GroupId id, std::size_t torus_dim) {
  if (id == GroupId::SO3) return "SO(3)";
  if (torus_dim == 1) return "S^1";
  return "T^" + std::to_string(torus_dim);
}

std::size_t group_rank(GroupId id, std::size_t torus_dim) {
  return id == GroupId::SO3 ? 1 : torus_dim;
}

GroupElement::GroupElement(GroupId id, std::vector<double> payload)
    : id_(id), payload_(std::move(payload)) {
  canonicalize();
}

GroupElement GroupElement::torus(std::vector<double> angles) {
  return GroupElement(GroupId::Torus, std::move(angles));
}

GroupElement GroupElement::so3(double w, double x, double y, double z) {
  return GroupElement(GroupId::SO3, {w, x, y, z});
}

GroupElement GroupElement::identity(GroupId id, std::size_t torus_dim) {
  if (id == GroupId::SO3) return so3(1.0, 0.0, 0.0, 0.0);
  return torus(std::vector<double>(torus_dim, 0.0));
}

GroupElement GroupElement::rotation(const std::array<double, 3>& axis, double radians) {
  double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (n == 0.0) throw std::invalid_argument("rotation axis must be nonzero");
  double s = std::sin(radians / 2.0) / n;
  return so3(std::cos(radians / 2.0), s * axis[0], s * axis[1], s * axis[2]);
}

std::size_t GroupElement::manifold_dim() const {
  return id_ == GroupId::SO3 ? 3 : payload_.size();
}

bool GroupElement::same_group(const GroupElement& other) const {
  return id_ == other.id_ && payload_.size() == other.payload_.size();
}

void GroupElement::canonicalize() {
  if (id_ == GroupId::Torus) {
    for (auto& a : payload_) a = wrap01(a);
    return;
  }
  double n = 0.0;
  for (double c : payload_) n += c * c;
  n = std::sqrt(n);
  if (n == 0.0) throw std::invalid_argument("zero quaternion");
  for (auto& c : payload_) c /= n;
  // Double-cover quotient: w > 0, or w == 0 and first nonzero imaginary > 0.
  bool flip = false;
  if (payload_[0] < 0.0) {
    flip = true;
  } else if (payload_[0] == 0.0) {
    for (std::size_t i = 1; i < 4; ++i) {
      if (payload_[i] == 0.0) continue;
      flip = payload_[i] < 0.0;
      break;
    }
  }
  if (flip)
    for (auto& c : payload_) c = -c;
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << (id_ == GroupId::SO3 ? "so3(" : "torus(");
  for (std::size_t i = 0; i < payload_.size(); ++i) {
    if (i) out << ", ";
    out << payload_[i];
  }
  out << ")";
  return out.str();
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (!a.same_group(b)) throw GroupMismatch("product of elements of different groups");
  if (a.id() == GroupId::Torus) {
    std::vector<double> angles(a.payload().size());
    for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = a.payload()[i] + b.payload()[i];
    return GroupElement::torus(std::move(angles));
  }
  const auto& p = a.payload();
  const auto& q = b.payload();
  return GroupElement::so3(p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
                           p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
                           p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
                           p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]);
}

GroupElement inverse(const GroupElement& a) {
  if (a.id() == GroupId::Torus) {
    std::vector<double> angles(a.payload().size());
    for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = -a.payload()[i];
    return GroupElement::torus(std::move(angles));
  }
  const auto& p = a.payload();
  return GroupElement::so3(p[0], -p[1], -p[2], -p[3]);
}

double distance(const GroupElement& a, const GroupElement& b) {
  if (!a.same_group(b)) throw GroupMismatch("distance between elements of different groups");
  if (a.id() == GroupId::Torus) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.payload().size(); ++i)
      d = std::max(d, circle_dist(a.payload()[i], b.payload()[i]));
    return d;
  }
  double dminus = 0.0, dplus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    dminus = std::max(dminus, std::fabs(a.payload()[i] - b.payload()[i]));
    dplus = std::max(dplus, std::fabs(a.payload()[i] + b.payload()[i]));
  }
  return std::min(dminus, dplus);
}

AlgebraVector::AlgebraVector(GroupId id, std::vector<double> coords)
    : id_(id), coords_(std::move(coords)) {
  if (id_ == GroupId::SO3 && coords_.size() != 3)
    throw std::invalid_argument("so(3) vector needs 3 coordinates");
}

AlgebraVector AlgebraVector::zero(GroupId id, std::size_t dim) {
  return AlgebraVector(id, std::vector<double>(id == GroupId::SO3 ? 3 : dim, 0.0));
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& other) const {
  if (id_ != other.id_ || coords_.size() != other.coords_.size())
    throw GroupMismatch("algebra vector sum over different algebras");
  AlgebraVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

AlgebraVector AlgebraVector::operator-(const AlgebraVector& other) const {
  return *this + other.scaled(-1.0);
}

AlgebraVector AlgebraVector::scaled(double f) const {
  AlgebraVector out = *this;
  for (auto& c : out.coords_) c *= f;
  return out;
}

double AlgebraVector::norm_inf() const {
  double n = 0.0;
  for (double c : coords_) n = std::max(n, std::fabs(c));
  return n;
}

double AlgebraVector::norm2() const {
  double n = 0.0;
  for (double c : coords_) n += c * c;
  return std::sqrt(n);
}

GroupElement exp_algebra(const AlgebraVector& v) {
  if (v.id() == GroupId::Torus) return GroupElement::torus(v.coords());
  double theta = v.norm2();
  double s;  // sin(theta/2)/theta, continued through theta = 0
  if (theta < 1e-6) {
    s = 0.5 - theta * theta / 48.0;
  } else {
    s = std::sin(theta / 2.0) / theta;
  }
  return GroupElement::so3(std::cos(theta / 2.0), s * v[0], s * v[1], s * v[2]);
}

AlgebraVector lie_bracket(const AlgebraVector& a, const AlgebraVector& b) {
  if (a.id() != b.id() || a.dim() != b.dim())
    throw GroupMismatch("bracket of vectors from different algebras");
  if (a.id() == GroupId::Torus) return AlgebraVector::zero(GroupId::Torus, a.dim());
  return AlgebraVector(GroupId::SO3, {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                      a[0] * b[1] - a[1] * b[0]});
}

AlgebraVector TorusDescriptor::algebra_from_coords(const std::vector<double>& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("coordinate count != torus dimension");
  AlgebraVector out = AlgebraVector::zero(group, torus_dim);
  for (std::size_t i = 0; i < coords.size(); ++i)
    out = out + integral_basis[i].scaled(coords[i]);
  return out;
}

namespace {

struct AxisDecomposition {
  bool is_identity;
  std::array<double, 3> axis;  // canonical sign (first nonzero positive)
  double angle;                // radians, signed w.r.t. the canonical axis
};

AxisDecomposition rotation_axis(const GroupElement& q, double tol_identity) {
  const auto& p = q.payload();
  double vn = std::sqrt(p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
  AxisDecomposition out{};
  if (vn <= tol_identity) {
    out.is_identity = true;
    out.axis = {0.0, 0.0, 0.0};
    out.angle = 0.0;
    return out;
  }
  out.is_identity = false;
  out.axis = {p[1] / vn, p[2] / vn, p[3] / vn};
  double sign = 1.0;
  for (double c : out.axis) {
    if (c == 0.0) continue;
    if (c < 0.0) sign = -1.0;
    break;
  }
  for (auto& c : out.axis) c *= sign;
  out.angle = sign * 2.0 * std::atan2(vn, p[0]);
  return out;
}

double axis_line_angle(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  double cx = u[1] * v[2] - u[2] * v[1];
  double cy = u[2] * v[0] - u[0] * v[2];
  double cz = u[0] * v[1] - u[1] * v[0];
  double s = std::sqrt(cx * cx + cy * cy + cz * cz);
  return std::asin(std::min(1.0, s));
}

}  // namespace

TorusDescriptor commuting_torus(const std::vector<GroupElement>& phases, double tol_comm,
                                double axis_tol) {
  if (phases.empty()) throw std::invalid_argument("commuting_torus of empty phase list");
  for (std::size_t i = 1; i < phases.size(); ++i)
    if (!phases[0].same_group(phases[i]))
      throw GroupMismatch("phases from different groups");

  for (std::size_t i = 0; i < phases.size(); ++i)
    for (std::size_t j = i + 1; j < phases.size(); ++j) {
      double defect = distance(mul(phases[i], phases[j]), mul(phases[j], phases[i]));
      if (defect > tol_comm) {
        std::ostringstream msg;
        msg << "phases " << i + 1 << " and " << j + 1 << " do not commute (defect " << defect
            << ")";
        throw NonCommutingPhases(msg.str());
      }
    }

  TorusDescriptor T;
  T.group = phases[0].id();
  if (T.group == GroupId::Torus) {
    const std::size_t d = phases[0].payload().size();
    T.torus_dim = d;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<double> e(d, 0.0);
      e[i] = 1.0;
      T.integral_basis.emplace_back(GroupId::Torus, std::move(e));
    }
    return T;
  }

  T.torus_dim = 3;
  bool have_axis = false;
  for (const auto& g : phases) {
    AxisDecomposition ad = rotation_axis(g, 1e-12);
    if (ad.is_identity) continue;
    if (!have_axis) {
      T.axis = ad.axis;
      have_axis = true;
      continue;
    }
    if (axis_line_angle(T.axis, ad.axis) > axis_tol)
      throw NonCommutingPhases("commuting phases do not share a rotation axis");
  }
  if (!have_axis) return T;  // all phases trivial: 0-dimensional torus
  T.integral_basis.push_back(AlgebraVector(
      GroupId::SO3, {kTwoPi * T.axis[0], kTwoPi * T.axis[1], kTwoPi * T.axis[2]}));
  return T;
}

namespace {

double wrap_half(double x) {  // into [-1/2, 1/2)
  double y = x - std::floor(x + 0.5);
  if (y >= 0.5) y -= 1.0;
  if (y < -0.5) y += 1.0;
  return y;
}

// Coordinates of a point of T^d over a sublattice basis (columns = basis
// vectors, entries in turn units), minimizing the residual over nearby
// integer lifts of the angles. Least squares per lift; exact for points on
// the subtorus.
std::vector<double> sublattice_coordinates(const GroupElement& gamma, const TorusDescriptor& T,
                                           double* residual_out) {
  const std::size_t d = gamma.payload().size();
  const std::size_t r = T.dim();
  // Normal matrix of the basis.
  std::vector<std::vector<double>> gram(r, std::vector<double>(r, 0.0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t i = 0; i < d; ++i)
        gram[a][b] += T.integral_basis[a][i] * T.integral_basis[b][i];

  auto solve_gram = [&](std::vector<double> rhs) {
    auto M = gram;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < r; ++i)
        if (std::fabs(M[i][k]) > std::fabs(M[p][k])) p = i;
      std::swap(M[k], M[p]);
      std::swap(rhs[k], rhs[p]);
      for (std::size_t i = k + 1; i < r; ++i) {
        double f = M[i][k] / M[k][k];
        for (std::size_t j = k; j < r; ++j) M[i][j] -= f * M[k][j];
        rhs[i] -= f * rhs[k];
      }
    }
    std::vector<double> x(r, 0.0);
    for (std::size_t k = r; k-- > 0;) {
      double acc = rhs[k];
      for (std::size_t j = k + 1; j < r; ++j) acc -= M[k][j] * x[j];
      x[k] = acc / M[k][k];
    }
    return x;
  };

  double best_res = 1e300;
  std::vector<double> best(r, 0.0);
  std::vector<int> shift(d, -1);
  for (;;) {
    std::vector<double> lifted(d);
    for (std::size_t i = 0; i < d; ++i) lifted[i] = gamma.payload()[i] + shift[i];
    std::vector<double> rhs(r, 0.0);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t i = 0; i < d; ++i) rhs[a] += T.integral_basis[a][i] * lifted[i];
    std::vector<double> c = solve_gram(rhs);
    double res = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double rec = 0.0;
      for (std::size_t a = 0; a < r; ++a) rec += T.integral_basis[a][i] * c[a];
      res = std::max(res, std::fabs(rec - lifted[i]));
    }
    if (res < best_res) {
      best_res = res;
      best = c;
    }
    std::size_t carry = 0;
    while (carry < d && ++shift[carry] > 1) shift[carry++] = -1;
    if (carry == d) break;
  }
  if (residual_out) *residual_out = best_res;
  for (auto& c : best) c = wrap_half(c);
  return best;
}

}  // namespace

double torus_distance(const GroupElement& gamma, const TorusDescriptor& T) {
  if (gamma.id() != T.group) throw GroupMismatch("element and torus from different groups");
  if (T.dim() == 0) return distance(gamma, GroupElement::identity(T.group, T.torus_dim));
  if (T.group == GroupId::Torus) {
    if (T.dim() == T.torus_dim) return 0.0;  // full group
    double res = 0.0;
    sublattice_coordinates(gamma, T, &res);
    return res;
  }
  const auto& p = gamma.payload();
  double dot = p[1] * T.axis[0] + p[2] * T.axis[1] + p[3] * T.axis[2];
  double px = p[1] - dot * T.axis[0];
  double py = p[2] - dot * T.axis[1];
  double pz = p[3] - dot * T.axis[2];
  return std::sqrt(px * px + py * py + pz * pz);
}

std::vector<double> torus_coordinates(const GroupElement& gamma, const TorusDescriptor& T,
                                      double tol_mem) {
  double dist = torus_distance(gamma, T);
  if (dist > tol_mem) {
    std::ostringstream msg;
    msg << "element " << gamma.to_string() << " is not in the torus (distance " << dist << ")";
    throw NotInTorus(msg.str());
  }
  if (T.dim() == 0) return {};
  if (T.group == GroupId::Torus) {
    if (T.dim() == T.torus_dim) {
      // Full torus with the standard basis: wrap each angle.
      std::vector<double> coords(gamma.payload().size());
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = wrap_half(gamma.payload()[i]);
      return coords;
    }
    return sublattice_coordinates(gamma, T, nullptr);
  }
  const auto& p = gamma.payload();
  double dot = p[1] * T.axis[0] + p[2] * T.axis[1] + p[3] * T.axis[2];
  double theta = 2.0 * std::atan2(dot, p[0]);
  return {wrap_half(theta / kTwoPi)};
}

AlgebraVector principal_log(const GroupElement& gamma, const TorusDescriptor& T, double tol_mem) {
  std::vector<double> coords = torus_coordinates(gamma, T, tol_mem);
  if (T.dim() == 0) return AlgebraVector::zero(T.group, T.torus_dim);
  return T.algebra_from_coords(coords);
}

}  // namespace torusrec
