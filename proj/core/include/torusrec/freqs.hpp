#pragma once

#include <optional>
#include <vector>

#include "torusrec/exact_scalar.hpp"
#include "torusrec/intmat.hpp"

namespace torusrec {

/// One frequency entry: always carries a float value, and an ExactScalar
/// representation when the entry is certified.
struct FreqEntry {
  std::optional<ExactScalar> exact;
  double value = 0.0;
};

class FrequencyVector {
 public:
  FrequencyVector() = default;
  explicit FrequencyVector(std::vector<FreqEntry> entries) : entries_(std::move(entries)) {}

  static FrequencyVector from_exact(const std::vector<ExactScalar>& entries);
  static FrequencyVector from_values(const std::vector<double>& values);

  std::size_t size() const { return entries_.size(); }
  const FreqEntry& entry(std::size_t i) const { return entries_[i]; }
  double value(std::size_t i) const { return entries_[i].value; }
  std::vector<double> values() const;
  bool all_exact() const;
  /// Shared coefficient basis of the exact entries (throws if mixed).
  std::shared_ptr<const ScalarBasis> scalar_basis() const;

  void push_back(FreqEntry e) { entries_.push_back(std::move(e)); }

  /// Entrywise scaling by a positive rational (used for omega / r).
  FrequencyVector scaled(const Rational& f) const;

  static FrequencyVector concat(const FrequencyVector& a, const FrequencyVector& b);

 private:
  std::vector<FreqEntry> entries_;
};

struct ResonanceSearchOptions {
  long height_bound = 50;
  double tol = 1e-9;
};

/// Z-basis of integer relations p with p.v = 0. Exact-mode results are
/// certified; numeric-mode results come from a bounded exhaustive search and
/// carry the heuristic flag.
struct ResonanceLattice {
  std::vector<IntVec> basis;
  bool heuristic = false;

  std::size_t rank() const { return basis.size(); }
};

/// True iff the only integer relation among the entries is zero. Exact-mode
/// entries required.
bool is_nonresonant(const FrequencyVector& v);

/// Resonance lattice of v. All-exact vectors go through exact rational
/// kernel computation; anything else through the bounded search, with
/// |p.v| < opts.tol and |p_i| <= opts.height_bound.
ResonanceLattice resonance_lattice(const FrequencyVector& v,
                                   const ResonanceSearchOptions& opts = {});

}  // namespace torusrec
