#pragma once

#include <cstdint>
#include <string_view>

#include "gaussia/phase_space.hpp"

namespace gaussia {

enum class CorrelationKind {
  entropy,
  mutual_information,
  classical,
  discord,
  entanglement,
  tripartite,
};

std::string_view to_string(CorrelationKind kind);

/// Values in (-kZeroClamp, 0) are reported as 0.
inline constexpr double kZeroClamp = 1e-9;

/// Nonnegative information quantity in nats, tagged with what it measures.
class CorrelationValue {
 public:
  /// Throws Error for NaN or values below -kZeroClamp.
  CorrelationValue(double value, CorrelationKind kind);

  double value() const noexcept { return value_; }
  CorrelationKind kind() const noexcept { return kind_; }

 private:
  double value_;
  CorrelationKind kind_;
};

/// S2 = 1/2 ln det sigma. Throws NotBonaFide for unphysical input.
CorrelationValue renyi2_entropy(const CovarianceMatrix& sigma);

/// Shannon entropy of the Wigner distribution, S2 + N (1 + ln pi).
double wigner_shannon_entropy(const CovarianceMatrix& sigma);

/// I2 = S2(A) + S2(B) - S2(AB); the partition must cover every mode.
///
/// Evaluated through the canonical correlations of the off-diagonal block,
/// -1/2 sum ln(1 - mu_k^2), which stays accurate for weakly correlated states.
CorrelationValue mutual_information(const CovarianceMatrix& sigma, const ModePartition& partition);

/// E2 of a pure state: S2 of either marginal. Throws NotPure if
/// |det sigma - 1| > 1e-6.
CorrelationValue pure_state_entanglement(const CovarianceMatrix& sigma,
                                         const ModePartition& partition);

struct EntanglementOptions {
  /// Total objective evaluations over all starts.
  int budget = 20000;
  int starts = 32;
  std::uint64_t seed = 0x6a09e667f3bcc908ULL;
  /// Largest tolerated violation of sigma - gamma >= 0, relative to max|sigma|.
  double feasibility_tolerance = 1e-8;
};

struct EntanglementEstimate {
  CorrelationValue value;
  /// max(0, -min eig(sigma - gamma)) at the reported gamma.
  double penalty_residual;
  int evaluations;
  /// The pure CM gamma achieving the reported value.
  CovarianceMatrix witness;
};

/// Upper bound on the Gaussian Renyi-2 entanglement of a two-mode state.
///
/// Minimizes 1/2 ln det gamma_A over pure gamma <= sigma. The search runs in
/// the local standard form [[a I, diag(c+, c-)], [., b I]] and mixes three
/// candidate sources: pure states built on sigma's normal modes (always
/// feasible, and the whole feasible set when a symplectic eigenvalue is 1),
/// rotation-free states S(t) under local squeezing, for which feasibility is
/// an exact 2x2 test, and the 7-parameter family L (S(t) S(t)^T) L^T with a
/// quadratic eigenvalue penalty whose weight grows tenfold per round. Pure
/// inputs return their marginal entropy directly.
///
/// Throws Unsupported for more than one mode per side and Infeasible when no
/// candidate reaches the feasibility tolerance within the budget.
EntanglementEstimate entanglement_estimate(const CovarianceMatrix& sigma,
                                           const ModePartition& partition,
                                           const EntanglementOptions& options = {});

}  // namespace gaussia
