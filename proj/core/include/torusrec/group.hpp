#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "torusrec/errors.hpp"

namespace torusrec {

/// Supported symmetry groups. The interface is a closed enumeration: every
/// operation switches on the id. Supporting another compact group (SU(2),
/// SO(n)) means adding an id here and a branch to each switch in group.cpp;
/// nothing outside this module inspects payloads directly.
enum class GroupId { Torus, SO3 };

std::string group_name(GroupId id, std::size_t torus_dim);

/// Dimension of a maximal torus: d for T^d, 1 for SO(3).
std::size_t group_rank(GroupId id, std::size_t torus_dim);

/// Element of T^d or SO(3).
///
/// T^d payload: d angles in turn units, each reduced to [0,1).
/// SO(3) payload: unit quaternion (w,x,y,z), renormalized after every
/// operation and sign-canonicalized (w > 0, or w == 0 and the first nonzero
/// imaginary component > 0) so that the double cover never produces two
/// representations of one rotation.
class GroupElement {
 public:
  static GroupElement torus(std::vector<double> angles);
  static GroupElement so3(double w, double x, double y, double z);
  static GroupElement identity(GroupId id, std::size_t torus_dim);
  /// Rotation about `axis` (normalized internally) by `radians`.
  static GroupElement rotation(const std::array<double, 3>& axis, double radians);

  GroupId id() const { return id_; }
  /// T^d: d. SO(3): 3.
  std::size_t manifold_dim() const;
  const std::vector<double>& payload() const { return payload_; }

  bool same_group(const GroupElement& other) const;
  std::string to_string() const;

 private:
  GroupElement(GroupId id, std::vector<double> payload);
  void canonicalize();

  GroupId id_;
  std::vector<double> payload_;
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// Bi-invariant-ish payload distance used by all tolerance checks. Torus:
/// max over coordinates of the circle distance. SO(3): max-norm quaternion
/// distance modulo the double cover, min(|a-b|, |a+b|).
double distance(const GroupElement& a, const GroupElement& b);

/// Lie algebra coordinates over the fixed basis of each group.
///
/// Torus groups: R^d scaled so that exp is reduction mod 1; one coordinate
/// unit is one full turn. SO(3): rotation-generator coordinates in radians,
/// exp(theta * u) with |u| = 1 is the rotation by theta about u.
class AlgebraVector {
 public:
  AlgebraVector() = default;
  AlgebraVector(GroupId id, std::vector<double> coords);
  static AlgebraVector zero(GroupId id, std::size_t dim);

  GroupId id() const { return id_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<double>& coords() const { return coords_; }
  double& operator[](std::size_t i) { return coords_[i]; }
  double operator[](std::size_t i) const { return coords_[i]; }

  AlgebraVector operator+(const AlgebraVector& other) const;
  AlgebraVector operator-(const AlgebraVector& other) const;
  AlgebraVector scaled(double f) const;

  double norm_inf() const;
  double norm2() const;

 private:
  GroupId id_ = GroupId::Torus;
  std::vector<double> coords_;
};

GroupElement exp_algebra(const AlgebraVector& v);

/// Lie bracket. Zero for torus groups; the cross product of generator
/// coordinates for so(3).
AlgebraVector lie_bracket(const AlgebraVector& a, const AlgebraVector& b);

/// A torus subgroup given by an integral basis of its Lie algebra: the basis
/// generates the full lattice of algebra vectors that exponentiate to the
/// identity. For SO(3) the only nontrivial tori are the circles of rotations
/// about a fixed axis, recorded in `axis`.
struct TorusDescriptor {
  GroupId group = GroupId::Torus;
  std::size_t torus_dim = 0;  // ambient group dim for GroupId::Torus
  std::vector<AlgebraVector> integral_basis;
  std::array<double, 3> axis = {0.0, 0.0, 0.0};  // SO(3) only; unit when dim()==1

  std::size_t dim() const { return integral_basis.size(); }
  AlgebraVector algebra_from_coords(const std::vector<double>& coords) const;
};

/// Smallest torus this module can produce whose subgroup contains every
/// input phase: the full group for T^d, the circle about the shared rotation
/// axis for SO(3) (or the trivial torus when every phase is the identity).
/// Throws NonCommutingPhases when a pair fails the commutation test or when
/// commuting SO(3) phases do not share an axis.
TorusDescriptor commuting_torus(const std::vector<GroupElement>& phases,
                                double tol_comm = 1e-9, double axis_tol = 1e-8);

/// Distance from gamma to the subgroup described by T (0 when inside).
double torus_distance(const GroupElement& gamma, const TorusDescriptor& T);

/// Coordinates of gamma over T's integral basis, principal branch: every
/// coordinate in [-1/2, 1/2). Throws NotInTorus if gamma is farther than
/// tol_mem from T.
std::vector<double> torus_coordinates(const GroupElement& gamma, const TorusDescriptor& T,
                                      double tol_mem = 1e-9);

/// The algebra vector with the principal-branch coordinates above, so that
/// exp_algebra(principal_log(gamma, T)) == gamma.
AlgebraVector principal_log(const GroupElement& gamma, const TorusDescriptor& T,
                            double tol_mem = 1e-9);

}  // namespace torusrec
