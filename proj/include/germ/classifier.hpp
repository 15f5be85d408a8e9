// The decision procedure for the multiplicity bound mu >= (m-1)^n:
// verdicts for the equality case (semi-homogeneity) and, for weighted
// homogeneous germs, the homogeneity-after-coordinate-change certificate
// (full quadratic rank for m = 2, equal normalized weights for m >= 3).
// Also the axis-power deformation family and seeded semicontinuity sampling.
#ifndef GERM_CLASSIFIER_HPP
#define GERM_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/germ.hpp"
#include "germ/local_algebra.hpp"
#include "germ/newton.hpp"
#include "germ/weighted.hpp"

namespace germ {

struct BoundReport {
  Colength mu;
  Colength tau;
  unsigned m = 0;
  Int bound;             // (m-1)^n
  bool equality = false;  // mu finite and mu == bound
  bool yau_zuo = false;   // mu == tau == bound
};

// Computes mu, tau, m and the bound. When mu is finite, mu >= (m-1)^n is
// asserted; a violation raises InternalInconsistencyError.
BoundReport bound_report(const Germ& f, const Limits& limits = {});

enum class VerdictKind {
  SmoothPoint,
  NonIsolated,
  StrictInequality,
  SemiHomogeneous,
  HomogeneousEquivalent,
};

std::string to_string(VerdictKind k);

struct HomogeneityEvidence {
  enum class Kind { AllWeightsEqual, FullRankQuadric };
  Kind kind = Kind::AllWeightsEqual;
  std::optional<NormalizedWeights> weights;  // AllWeightsEqual
  unsigned rank = 0;                         // FullRankQuadric
};

struct ClassificationVerdict {
  VerdictKind kind = VerdictKind::SmoothPoint;
  std::optional<BoundReport> report;
  std::optional<HomogeneityEvidence> evidence;
  std::vector<std::string> trail;  // human-readable derivation steps
};

// Decision tree: mu = 0 -> SmoothPoint; mu infinite -> NonIsolated;
// mu > bound -> StrictInequality; equality -> the leading form must define an
// isolated singularity (SemiHomogeneous), and when a weight system is
// declared or uniquely recovered the homogeneity certificate is produced
// (HomogeneousEquivalent). Declared weights take precedence and are validated
// first. An equality case failing its mandatory check is an
// InternalInconsistencyError, never a verdict.
ClassificationVerdict classify(
    const Germ& f, const std::optional<WeightSystem>& declared = std::nullopt,
    const Limits& limits = {});

// Rank of the symmetric matrix of a homogeneous quadratic (or zero) input,
// by exact elimination.
unsigned quadratic_rank(const Germ& f2);

struct DeformationFamily {
  Germ base;
  std::vector<Rat> parameters;
  Germ deformed;  // base + sum_i t_i z_i^m
};

DeformationFamily build_deformation(const Germ& f, const std::vector<Rat>& t);

struct SemicontinuitySample {
  std::vector<Rat> t;
  Colength mu_t;
  Int nu_t;
  bool chain_ok = false;  // mu(f) >= mu(f_t) >= nu(f_t)
};

struct SemicontinuityReport {
  Colength mu;
  unsigned m = 0;
  std::vector<SemicontinuitySample> samples;
  bool all_ok = true;
};

// Draws `samples` parameter vectors of small nonzero rationals (numerators
// and denominators bounded by 7) deterministically from the seed, redrawing
// any vector that would cancel an axis power (the family must stay
// convenient), computes mu(f_t) and nu(f_t) for each, and checks the chain
// mu(f) >= mu(f_t) >= nu(f_t). A violation is reported, never swallowed.
// Per-sample computations may run in parallel; output order is by sample
// index either way.
SemicontinuityReport verify_semicontinuity(const Germ& f, unsigned samples,
                                           std::uint64_t seed,
                                           const Limits& limits = {},
                                           bool parallel = true);

// Everything the CLI surfaces for one germ, computed in one pass.
struct FullReport {
  BoundReport bounds;
  bool convenient = false;
  std::optional<Int> newton;  // set iff convenient and within dimension range
  WeightRecovery weight_recovery;
  std::optional<WeightSystem> weights_used;  // declared or uniquely recovered
  ClassificationVerdict verdict;
};

FullReport full_report(const Germ& f,
                       const std::optional<WeightSystem>& declared = std::nullopt,
                       const Limits& limits = {});

}  // namespace germ

#endif
