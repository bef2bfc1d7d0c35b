#include "torusrec/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torusrec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Canonical representative of {n, -n}: first nonzero component positive.
// Returns -1 when the index was flipped (sine coefficients change sign).
int canonicalize_index(std::vector<int>& n) {
  for (int c : n) {
    if (c > 0) return 1;
    if (c < 0) {
      for (auto& v : n) v = -v;
      return -1;
    }
  }
  return 1;
}

bool is_zero_index(const std::vector<int>& n) {
  for (int c : n)
    if (c != 0) return false;
  return true;
}

}  // namespace

FourierSeries::FourierSeries(std::size_t angle_count, GroupId group, std::size_t group_dim)
    : angle_count_(angle_count), group_(group),
      alg_dim_(group == GroupId::SO3 ? 3 : group_dim) {}

void FourierSeries::check_compatible(const FourierSeries& other) const {
  if (angle_count_ != other.angle_count_ || group_ != other.group_ ||
      alg_dim_ != other.alg_dim_)
    throw std::invalid_argument("incompatible series");
}

void FourierSeries::add_term(std::vector<int> n, const AlgebraVector& c,
                             const AlgebraVector& s) {
  if (n.size() != angle_count_) throw std::invalid_argument("multi-index length != angle count");
  AlgebraVector sin_coeff = s;
  if (canonicalize_index(n) < 0) sin_coeff = s.scaled(-1.0);
  if (is_zero_index(n)) sin_coeff = AlgebraVector::zero(group_, alg_dim_);
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    terms_.emplace(std::move(n), std::make_pair(c, sin_coeff));
  } else {
    it->second.first = it->second.first + c;
    it->second.second = it->second.second + sin_coeff;
  }
}

AlgebraVector FourierSeries::eval(const std::vector<double>& phi) const {
  AlgebraVector acc = AlgebraVector::zero(group_, alg_dim_);
  for (const auto& [n, cs] : terms_) {
    double arg = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) arg += n[i] * phi[i];
    arg *= kTwoPi;
    acc = acc + cs.first.scaled(std::cos(arg)) + cs.second.scaled(std::sin(arg));
  }
  return acc;
}

FourierSeries FourierSeries::directional_derivative(const std::vector<double>& u) const {
  FourierSeries out(angle_count_, group_, alg_dim_);
  for (const auto& [n, cs] : terms_) {
    double rate = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) rate += n[i] * u[i];
    rate *= kTwoPi;
    if (rate == 0.0) continue;
    out.add_term(n, cs.second.scaled(rate), cs.first.scaled(-rate));
  }
  return out;
}

FourierSeries FourierSeries::lie_product(const FourierSeries& other) const {
  check_compatible(other);
  FourierSeries out(angle_count_, group_, alg_dim_);
  if (group_ == GroupId::Torus) return out;  // abelian
  for (const auto& [a, pq] : terms_) {
    for (const auto& [b, rs] : other.terms_) {
      AlgebraVector cc = lie_bracket(pq.first, rs.first);
      AlgebraVector cs = lie_bracket(pq.first, rs.second);
      AlgebraVector sc = lie_bracket(pq.second, rs.first);
      AlgebraVector ss = lie_bracket(pq.second, rs.second);
      std::vector<int> diff(a.size()), sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        diff[i] = a[i] - b[i];
        sum[i] = a[i] + b[i];
      }
      // cosA cosB = (cos(A-B) + cos(A+B))/2        etc.
      out.add_term(diff, (cc + ss).scaled(0.5), (sc - cs).scaled(0.5));
      out.add_term(sum, (cc - ss).scaled(0.5), (sc + cs).scaled(0.5));
    }
  }
  return out;
}

FourierSeries FourierSeries::operator+(const FourierSeries& other) const {
  check_compatible(other);
  FourierSeries out = *this;
  for (const auto& [n, cs] : other.terms_) out.add_term(n, cs.first, cs.second);
  return out;
}

FourierSeries FourierSeries::operator-(const FourierSeries& other) const {
  return *this + other.scaled(-1.0);
}

FourierSeries FourierSeries::scaled(double f) const {
  FourierSeries out(angle_count_, group_, alg_dim_);
  for (const auto& [n, cs] : terms_)
    out.add_term(n, cs.first.scaled(f), cs.second.scaled(f));
  return out;
}

AlgebraVector FourierSeries::period_integral(std::size_t direction,
                                             const std::vector<double>& base) const {
  AlgebraVector acc = AlgebraVector::zero(group_, alg_dim_);
  for (const auto& [n, cs] : terms_) {
    if (n[direction] != 0) continue;  // full period integrates to zero
    double arg = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) arg += n[i] * base[i];
    arg *= kTwoPi;
    acc = acc + cs.first.scaled(std::cos(arg)) + cs.second.scaled(std::sin(arg));
  }
  return acc;
}

double FourierSeries::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& [n, cs] : terms_) {
    m = std::max(m, cs.first.norm_inf());
    m = std::max(m, cs.second.norm_inf());
  }
  return m;
}

ExactSeries::ExactSeries(std::size_t angle_count, std::size_t coord_dim,
                         std::shared_ptr<const ScalarBasis> basis)
    : angle_count_(angle_count), coord_dim_(coord_dim), basis_(std::move(basis)) {}

void ExactSeries::add_term(std::vector<int> n, std::vector<ExactScalar> c,
                           std::vector<ExactScalar> s) {
  if (n.size() != angle_count_) throw std::invalid_argument("multi-index length != angle count");
  if (c.size() != coord_dim_ || s.size() != coord_dim_)
    throw std::invalid_argument("coefficient dimension mismatch");
  bool flipped = canonicalize_index(n) < 0;
  if (flipped)
    for (auto& e : s) e = -e;
  if (is_zero_index(n))
    for (auto& e : s) e = ExactScalar(basis_);
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    terms_.emplace(std::move(n), std::make_pair(std::move(c), std::move(s)));
  } else {
    for (std::size_t i = 0; i < coord_dim_; ++i) {
      it->second.first[i] += c[i];
      it->second.second[i] += s[i];
    }
  }
}

ExactSeries ExactSeries::operator-(const ExactSeries& other) const {
  if (angle_count_ != other.angle_count_ || coord_dim_ != other.coord_dim_)
    throw std::invalid_argument("incompatible exact series");
  ExactSeries out = *this;
  for (const auto& [n, cs] : other.terms_) {
    std::vector<ExactScalar> c, s;
    for (const auto& e : cs.first) c.push_back(-e);
    for (const auto& e : cs.second) s.push_back(-e);
    out.add_term(n, std::move(c), std::move(s));
  }
  return out;
}

ExactSeries ExactSeries::scaled_exact(const ExactScalar& factor) const {
  ExactSeries out(angle_count_, coord_dim_, basis_);
  for (const auto& [n, cs] : terms_) {
    std::vector<ExactScalar> c, s;
    for (const auto& e : cs.first) {
      if (!e.is_rational())
        throw std::domain_error("exact scaling requires rational series entries");
      c.push_back(factor.scaled(e.rational_part()));
    }
    for (const auto& e : cs.second) {
      if (!e.is_rational())
        throw std::domain_error("exact scaling requires rational series entries");
      s.push_back(factor.scaled(e.rational_part()));
    }
    out.add_term(n, std::move(c), std::move(s));
  }
  return out;
}

bool ExactSeries::all_entries_rational() const {
  for (const auto& [n, cs] : terms_) {
    for (const auto& e : cs.first)
      if (!e.is_rational()) return false;
    for (const auto& e : cs.second)
      if (!e.is_rational()) return false;
  }
  return true;
}

std::vector<ExactScalar> ExactSeries::period_integral_exact(
    std::size_t direction, const std::vector<Rational>& base) const {
  std::vector<ExactScalar> acc(coord_dim_, ExactScalar(basis_));
  for (const auto& [n, cs] : terms_) {
    if (n[direction] != 0) continue;
    Rational arg(0);
    for (std::size_t i = 0; i < n.size(); ++i) arg += Rational(n[i]) * base[i];
    // Reduce n.base mod 1 and map to exact cos/sin of 2 pi arg.
    arg -= Rational(round_nearest(arg));
    int cosw, sinw;
    if (arg == 0) {
      cosw = 1, sinw = 0;
    } else if (arg == Rational(1, 2) || arg == Rational(-1, 2)) {
      cosw = -1, sinw = 0;
    } else if (arg == Rational(1, 4)) {
      cosw = 0, sinw = 1;
    } else if (arg == Rational(-1, 4)) {
      cosw = 0, sinw = -1;
    } else {
      throw std::domain_error(
          "base point gives irrational trig weights; exact phases unavailable");
    }
    for (std::size_t i = 0; i < coord_dim_; ++i) {
      if (cosw != 0) acc[i] += cs.first[i].scaled(Rational(cosw));
      if (sinw != 0) acc[i] += cs.second[i].scaled(Rational(sinw));
    }
  }
  return acc;
}

}  // namespace torusrec
