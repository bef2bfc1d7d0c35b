#include "torusrec/freqs.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace torusrec {

FrequencyVector FrequencyVector::from_exact(const std::vector<ExactScalar>& entries) {
  std::vector<FreqEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(FreqEntry{e, e.value()});
  return FrequencyVector(std::move(out));
}

FrequencyVector FrequencyVector::from_values(const std::vector<double>& values) {
  std::vector<FreqEntry> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(FreqEntry{std::nullopt, v});
  return FrequencyVector(std::move(out));
}

std::vector<double> FrequencyVector::values() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return out;
}

bool FrequencyVector::all_exact() const {
  for (const auto& e : entries_)
    if (!e.exact) return false;
  return !entries_.empty();
}

std::shared_ptr<const ScalarBasis> FrequencyVector::scalar_basis() const {
  std::shared_ptr<const ScalarBasis> basis;
  for (const auto& e : entries_) {
    if (!e.exact) throw std::invalid_argument("frequency vector has numeric entries");
    if (!basis) {
      basis = e.exact->basis();
    } else if (basis != e.exact->basis() && basis->values != e.exact->basis()->values) {
      throw std::invalid_argument("frequency entries over different bases");
    }
  }
  if (!basis) throw std::invalid_argument("empty frequency vector");
  return basis;
}

FrequencyVector FrequencyVector::scaled(const Rational& f) const {
  std::vector<FreqEntry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    FreqEntry n;
    if (e.exact) n.exact = e.exact->scaled(f);
    n.value = e.value * f.get_d();
    out.push_back(std::move(n));
  }
  return FrequencyVector(std::move(out));
}

FrequencyVector FrequencyVector::concat(const FrequencyVector& a, const FrequencyVector& b) {
  std::vector<FreqEntry> out = a.entries_;
  out.insert(out.end(), b.entries_.begin(), b.entries_.end());
  return FrequencyVector(std::move(out));
}

namespace {

std::vector<IntVec> exact_lattice(const FrequencyVector& v) {
  auto basis = v.scalar_basis();
  const std::size_t layers = basis->size();
  const std::size_t n = v.size();
  // Row per basis coefficient: p is a relation iff it annihilates every
  // rational coefficient layer.
  RatMatrix A(layers, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& coeffs = v.entry(j).exact->coeffs();
    for (std::size_t l = 0; l < layers; ++l) A.at(l, j) = coeffs[l];
  }
  return rational_kernel_lattice(A);
}

void canonicalize_sign(IntVec& p) {
  for (const auto& c : p) {
    if (c > 0) return;
    if (c < 0) {
      for (auto& v : p) v = -v;
      return;
    }
  }
}

std::vector<IntVec> numeric_lattice(const std::vector<double>& v,
                                    const ResonanceSearchOptions& opts) {
  const std::size_t n = v.size();
  const long H = opts.height_bound;
  if (H < 0) throw std::invalid_argument("negative height bound");

  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(v[i]) > std::fabs(v[pivot])) pivot = i;
  if (std::fabs(v[pivot]) < opts.tol) {
    // Degenerate: everything annihilates an (effectively) zero vector.
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, BigInt(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }

  double box = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    box *= 2.0 * static_cast<double>(H) + 1.0;
    if (box > 2e9) throw std::invalid_argument("resonance search box too large");
  }

  // Exhaustive over the non-pivot coordinates; the pivot coordinate of any
  // relation is pinned within tol, so only a handful of candidates per tuple.
  std::vector<std::size_t> free_dims;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) free_dims.push_back(i);

  std::set<IntVec> found;
  std::vector<long> p(n, 0);
  std::vector<long> odo(free_dims.size(), -H);
  for (;;) {
    double rest = 0.0;
    for (std::size_t d = 0; d < free_dims.size(); ++d) {
      p[free_dims[d]] = odo[d];
      rest += static_cast<double>(odo[d]) * v[free_dims[d]];
    }
    long center = std::lround(-rest / v[pivot]);
    for (long q = center - 2; q <= center + 2; ++q) {
      if (q < -H || q > H) continue;
      if (std::fabs(static_cast<double>(q) * v[pivot] + rest) >= opts.tol) continue;
      p[pivot] = q;
      bool zero = true;
      for (long c : p)
        if (c != 0) zero = false;
      if (zero) continue;
      IntVec rel(n);
      for (std::size_t i = 0; i < n; ++i) rel[i] = p[i];
      canonicalize_sign(rel);
      found.insert(std::move(rel));
    }
    if (free_dims.empty()) break;
    std::size_t carry = 0;
    while (carry < odo.size() && ++odo[carry] > H) odo[carry++] = -H;
    if (carry == odo.size()) break;
  }

  std::vector<IntVec> gens(found.begin(), found.end());
  return hermite_row_basis(gens);
}

}  // namespace

bool is_nonresonant(const FrequencyVector& v) {
  if (!v.all_exact())
    throw std::invalid_argument("is_nonresonant requires exact-mode entries");
  return exact_lattice(v).empty();
}

ResonanceLattice resonance_lattice(const FrequencyVector& v,
                                   const ResonanceSearchOptions& opts) {
  ResonanceLattice out;
  if (v.size() == 0) return out;
  if (v.all_exact()) {
    out.basis = exact_lattice(v);
    out.heuristic = false;
  } else {
    out.basis = numeric_lattice(v.values(), opts);
    out.heuristic = true;
  }
  return out;
}

}  // namespace torusrec
