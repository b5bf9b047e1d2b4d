#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igm/prm.hpp"

namespace igm {

enum class Method { Pigm, Nigm, Ligm, Blankmeyer };

enum class Diagnostic {
  /// Some weight is <= 0. The closed form is reported unaltered.
  NonPositiveWeight,
  /// The factorization's smallest pivot is below kIllConditionedPivotRatio.
  IllConditioned,
};

inline constexpr double kIllConditionedPivotRatio = 1e-10;

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Diagnostic d) noexcept;

struct MethodResult {
  PriorityVector weights;
  Method method;
  /// r for NIGM, r~ for LIGM, 1 for PIGM, 0 for Blankmeyer.
  double shift = 0.0;
  std::vector<Diagnostic> diagnostics;
  /// From the LU factorization of the Gram matrix that was solved.
  double min_pivot_ratio = 0.0;

  /// Multiplier stored in `weights`; set only for LIGM.
  const std::optional<double>& multiplier() const noexcept { return weights.multiplier(); }

  /// Multiplier of the unshifted stationarity system G_bar w + lambda e = 0.
  /// The bordered solve with shift r~ returns lambda - r~ in its corner
  /// (because (G_bar + r~) w = G_bar w + r~ e when sum(w) = 1), so this adds r~
  /// back. Throws InvalidArgument for non-LIGM results.
  double kkt_multiplier() const;

  /// "PIGM", "NIGM(5)", "LIGM(0)", "Blankmeyer".
  std::string label() const;

  bool has(Diagnostic d) const;
};

/// Normalized row sums of the inverse full Gram matrix.
MethodResult pigm(const PairwiseReciprocalMatrix& prm);

/// Normalized row sums of (G_bar + r)^-1. With r == 0 this is the legacy
/// Blankmeyer path, and a singular G_bar (consistent input) raises
/// ZeroShiftOnConsistent instead of SingularMatrix.
MethodResult nigm(const PairwiseReciprocalMatrix& prm, double r = 1.0);

/// Solves the bordered system [[G_bar + r~, e^T], [e, 0]] (w, lambda) =
/// (0, ..., 0, 1). Weights sum to one by construction and are not rescaled.
MethodResult ligm(const PairwiseReciprocalMatrix& prm, double r_tilde = 0.0);

/// Legacy closed form C^-1 e / (e^T C^-1 e) with C = G_bar. Throws
/// SingularMatrix on perfectly consistent input, which is the known failure of
/// this formula rather than a defect.
MethodResult blankmeyer(const PairwiseReciprocalMatrix& prm);

}  // namespace igm
