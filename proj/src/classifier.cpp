#include "germ/classifier.hpp"

#include <exception>
#include <random>
#include <sstream>

#include "germ/linalg.hpp"
#include "germ/parser.hpp"

namespace germ {

namespace {

Int pow_ui(unsigned base, std::size_t exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return r;
}

bool colength_equals(const Colength& c, const Int& v) {
  return c.finite && Int(static_cast<unsigned long>(c.value)) == v;
}

bool colength_less(const Colength& c, const Int& v) {
  return c.finite && Int(static_cast<unsigned long>(c.value)) < v;
}

}  // namespace

BoundReport bound_report(const Germ& f, const Limits& limits) {
  BoundReport r;
  r.m = multiplicity(f);  // validates f != 0 and f(0) = 0
  r.mu = milnor_number(f, limits);
  r.tau = tjurina_number(f, limits);
  r.bound = pow_ui(r.m - 1, f.nvars());
  r.equality = colength_equals(r.mu, r.bound);
  r.yau_zuo = r.equality && colength_equals(r.tau, r.bound);
  if (colength_less(r.mu, r.bound)) {
    std::ostringstream os;
    os << "multiplicity bound violated: mu = " << to_string(r.mu)
       << " < (m-1)^n = " << r.bound.get_str();
    throw InternalInconsistencyError(os.str());
  }
  return r;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::SmoothPoint: return "SmoothPoint";
    case VerdictKind::NonIsolated: return "NonIsolated";
    case VerdictKind::StrictInequality: return "StrictInequality";
    case VerdictKind::SemiHomogeneous: return "SemiHomogeneous";
    case VerdictKind::HomogeneousEquivalent: return "HomogeneousEquivalent";
  }
  return "?";
}

unsigned quadratic_rank(const Germ& f2) {
  const std::size_t n = f2.nvars();
  RatMat q(n, RatRow(n, Rat(0)));
  for (const auto& [e, c] : f2.terms()) {
    if (total_degree(e) != 2)
      throw DomainError("quadratic rank of a non-quadratic input");
    std::size_t first = n, second = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 2) first = second = i;
      if (e[i] == 1) (first == n ? first : second) = i;
    }
    if (first == second) {
      q[first][first] = c;
    } else {
      q[first][second] = c / 2;
      q[second][first] = c / 2;
    }
  }
  return static_cast<unsigned>(rat_rank(std::move(q)));
}

ClassificationVerdict classify(const Germ& f,
                               const std::optional<WeightSystem>& declared,
                               const Limits& limits) {
  ClassificationVerdict v;
  BoundReport rep = bound_report(f, limits);
  v.report = rep;

  v.trail.push_back("multiplicity m = " + std::to_string(rep.m));
  v.trail.push_back("milnor number mu = " + to_string(rep.mu));
  v.trail.push_back("tjurina number tau = " + to_string(rep.tau));
  v.trail.push_back("bound (m-1)^n = " + rep.bound.get_str());

  if (declared) {
    if (!is_weighted_homogeneous(f, *declared))
      throw DomainError("declared weights " + to_string(*declared) +
                        " do not make the input weighted homogeneous");
    v.trail.push_back("declared weights " + to_string(*declared) + " validated");
  }

  if (!rep.mu.finite) {
    v.kind = VerdictKind::NonIsolated;
    v.trail.push_back("mu infinite: non-isolated singularity");
    return v;
  }
  if (rep.mu.value == 0) {
    v.kind = VerdictKind::SmoothPoint;
    v.trail.push_back("mu = 0: smooth point");
    return v;
  }
  if (!rep.equality) {
    v.kind = VerdictKind::StrictInequality;
    v.trail.push_back("mu > (m-1)^n: strict inequality");
    return v;
  }

  v.trail.push_back("mu = (m-1)^n: equality case");
  // Equality forces semi-homogeneity; verify rather than trust.
  if (!is_semihomogeneous(f, limits))
    throw InternalInconsistencyError(
        "equality case whose leading form is not an isolated singularity");
  v.trail.push_back(
      "leading form defines an isolated singularity: semi-homogeneous");
  if (rep.yau_zuo)
    v.trail.push_back("mu = tau = (m-1)^n: yau-zuo criterion satisfied");

  std::optional<WeightSystem> ws = declared;
  if (!ws) {
    WeightRecovery rec = recover_weights(f);
    switch (rec.kind) {
      case WeightRecoveryKind::Unique:
        ws = rec.weights;
        v.trail.push_back("recovered weights " + to_string(*ws));
        break;
      case WeightRecoveryKind::Underdetermined:
        v.trail.push_back(
            "weight system underdetermined (solution space dimension " +
            std::to_string(rec.space_basis.size()) +
            "); homogeneity certificate skipped, supply explicit weights");
        v.kind = VerdictKind::SemiHomogeneous;
        return v;
      case WeightRecoveryKind::None:
        v.trail.push_back(
            "no positive weight system: not weighted homogeneous in these "
            "coordinates");
        v.kind = VerdictKind::SemiHomogeneous;
        return v;
    }
  }

  // Weighted homogeneous equality case: produce the homogeneity certificate.
  HomogeneityEvidence ev;
  if (rep.m == 2) {
    unsigned rank = quadratic_rank(leading_form(f).leading);
    if (rank != f.nvars())
      throw InternalInconsistencyError(
          "weighted homogeneous equality case with degenerate quadratic "
          "leading form (rank " +
          std::to_string(rank) + " of " + std::to_string(f.nvars()) + ")");
    ev.kind = HomogeneityEvidence::Kind::FullRankQuadric;
    ev.rank = rank;
    v.trail.push_back("m = 2: quadratic form has full rank " +
                      std::to_string(rank) +
                      ", splits into a sum of squares");
  } else {
    NormalizedWeights nw = normalize_weights(*ws);
    if (!nw.all_equal())
      throw InternalInconsistencyError(
          "weighted homogeneous equality case with unequal weights " +
          to_string(nw));
    ev.kind = HomogeneityEvidence::Kind::AllWeightsEqual;
    ev.weights = nw;
    v.trail.push_back("m >= 3: normalized weights " + to_string(nw) +
                      " all equal");
  }
  v.evidence = ev;
  v.kind = VerdictKind::HomogeneousEquivalent;
  v.trail.push_back("homogeneous after a coordinate change");
  return v;
}

DeformationFamily build_deformation(const Germ& f, const std::vector<Rat>& t) {
  unsigned m = multiplicity(f);  // validates
  if (t.size() != f.nvars())
    throw DomainError("parameter vector length does not match variable count");
  Germ deformed = f;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Exponent e(f.nvars(), 0);
    e[i] = m;
    deformed.add_term(e, t[i]);
  }
  return {f, t, std::move(deformed)};
}

namespace {

// Small nonzero rationals, numerator and denominator bounded by 7, drawn from
// the raw engine stream (portable across standard libraries).
Rat draw_small_rat(std::mt19937_64& rng) {
  unsigned long num = 1 + static_cast<unsigned long>(rng() % 7);
  unsigned long den = 1 + static_cast<unsigned long>(rng() % 7);
  bool negative = (rng() & 1) != 0;
  Rat q(num, den);
  q.canonicalize();
  return negative ? Rat(-q) : q;
}

}  // namespace

SemicontinuityReport verify_semicontinuity(const Germ& f, unsigned samples,
                                           std::uint64_t seed,
                                           const Limits& limits, bool parallel) {
  SemicontinuityReport report;
  report.mu = milnor_number(f, limits);
  if (!report.mu.finite)
    throw DomainError("semicontinuity sampling requires finite mu");
  report.m = multiplicity(f);
  const std::size_t n = f.nvars();

  // Draw all parameter vectors up front, sequentially, so the report is
  // reproducible regardless of the execution mode. A vector that would cancel
  // an axis coefficient (leaving the family non-convenient) is redrawn.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rat>> params;
  for (unsigned s = 0; s < samples; ++s) {
    std::vector<Rat> t;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      t.clear();
      for (std::size_t i = 0; i < n; ++i) t.push_back(draw_small_rat(rng));
      bool convenient = true;
      for (std::size_t i = 0; i < n && convenient; ++i) {
        Exponent e(n, 0);
        e[i] = report.m;
        if (f.coeff(e) + t[i] == 0) convenient = false;
      }
      if (convenient) break;
      t.clear();
    }
    if (t.empty())
      throw DomainError("could not draw non-cancelling deformation parameters");
    params.push_back(std::move(t));
  }

  report.samples.resize(samples);
  std::vector<std::exception_ptr> errors(samples);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (long long s = 0; s < static_cast<long long>(samples); ++s) {
    try {
      SemicontinuitySample sample;
      sample.t = params[static_cast<std::size_t>(s)];
      DeformationFamily fam = build_deformation(f, sample.t);
      sample.mu_t = milnor_number(fam.deformed, limits);
      sample.nu_t = newton_number(fam.deformed, false);
      sample.chain_ok = sample.mu_t.finite &&
                        sample.mu_t.value <= report.mu.value &&
                        Int(static_cast<unsigned long>(sample.mu_t.value)) >=
                            sample.nu_t;
      report.samples[static_cast<std::size_t>(s)] = std::move(sample);
    } catch (...) {
      errors[static_cast<std::size_t>(s)] = std::current_exception();
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  for (const auto& sample : report.samples)
    if (!sample.chain_ok) report.all_ok = false;
  return report;
}

FullReport full_report(const Germ& f,
                       const std::optional<WeightSystem>& declared,
                       const Limits& limits) {
  FullReport r;
  r.verdict = classify(f, declared, limits);
  r.bounds = *r.verdict.report;
  r.weight_recovery = recover_weights(f);
  if (declared)
    r.weights_used = declared;
  else if (r.weight_recovery.kind == WeightRecoveryKind::Unique)
    r.weights_used = r.weight_recovery.weights;
  r.convenient = is_convenient(f);
  if (r.convenient && f.nvars() <= kMaxNewtonDim && f.constant_term() == 0)
    r.newton = newton_number(f, false);
  return r;
}

}  // namespace germ
