// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_CLASSIFIER_HPP_
#define NSEXACT_CLASSIFIER_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsexact/families.hpp"
#include "nsexact/geometry.hpp"

namespace nsexact {

/// Velocity (and optionally pressure) on a tensor polar grid. Value arrays
/// are row-major: index i * thetas.size() + j for (radii[i], thetas[j]).
struct FieldSamples {
  std::vector<double> radii;
  std::vector<double> thetas;
  std::vector<double> u1, u2;
  std::optional<std::vector<double>> p;

  std::size_t index(std::size_t i, std::size_t j) const { return i * thetas.size() + j; }

  /// Throws DegenerateSamples unless there are >= 8 increasing radii
  /// spanning a ratio >= 4, >= 16 increasing angles, and matching arrays.
  void validate() const;
};

/// Samples a catalog member; p is always filled.
FieldSamples sample_field(const FlowSolution& s, std::span<const double> radii, std::span<const double> thetas);

enum class PairKind { IdenticallyZeroPair, Proportional, Independent };

struct ProportionalityFit {
  PairKind kind = PairKind::Independent;
  double lambda = 0;    // f = lambda g when Proportional
  double residual = 0;  // RMS(f - lambda g) / RMS(f)
};

inline constexpr double kZeroRelTol = 1e-10;
inline constexpr double kZeroAbsTol = 1e-14;
inline constexpr double kFitThreshold = 1e-8;

/// Decides whether f = lambda g, both vanish, or neither.
ProportionalityFit proportionality_fit(std::span<const double> f, std::span<const double> g,
                                       double threshold = kFitThreshold);

enum class RadialModel { Power, LogLinear, Unclassifiable };

struct LambdaFit {
  RadialModel model = RadialModel::Unclassifiable;
  double lambda = 0;            // Power: phi = c r^lambda
  double c = 0;
  double log_c1 = 0, log_c2 = 0;  // LogLinear: phi = r (c1 + c2 ln r)
  double power_residual = 0;
  double loglinear_residual = 0;
};

/// Both models are fitted; the one within threshold wins, Power on a tie.
LambdaFit fit_lambda(std::span<const double> radii, std::span<const double> phi, double threshold = kFitThreshold);

struct ClassifyOptions {
  double threshold = kFitThreshold;  // normalized velocity residual to accept a fit
  double rank_tol = 1e-10;           // sigma2 / sigma1 allowed in rank-1 separation
};

struct ClassificationDiagnostics {
  std::string path;  // "zero", "single", "two"
  double lambda = 0;
  std::string lambda_model;
  double divergence_residual = 0;  // sampled relative |div u|, second-order differences
  double conditioning = 0;         // |D1| of the two-angle system (two-phi path)
  double compatibility = 0;        // angular compatibility residual (single-phi path)
  double critical_identity = 0;    // max critical identity residual (two-phi path)
  double pressure_residual = 0;    // RMS misfit of p when samples carry it, relative
  std::array<double, 2> sigma_ratio{};  // sigma2 / sigma1 per component
  std::string message;
};

struct ClassificationResult {
  std::optional<FlowSolution> solution;  // set only when fit_residual <= threshold
  double fit_residual = 0;               // RMS(u_data - u_model) / RMS(u_data)
  ClassificationDiagnostics diagnostics;

  bool classified() const { return solution.has_value(); }
  std::optional<Family> family() const;
};

/// Runs the single-phi test, then the two-phi test, and fits the selected
/// family's constants by least squares. Overlapping catalog members resolve
/// to the earliest family in declaration order (e.g. a rigid rotation is
/// Linear, not RotLog). Throws DegenerateSamples when a component is not
/// rank-1 separated.
ClassificationResult classify(const FieldSamples& fs, const ConeDomain& d, const ClassifyOptions& opt = {});

}  // namespace nsexact

#endif  // NSEXACT_CLASSIFIER_HPP_
