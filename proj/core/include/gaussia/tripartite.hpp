#pragma once

// Monogamy residuals on pure three-mode states.
//
// For a hub mode h and the other two modes x < y, the residual is
//   Q(h) = Q(h : xy) - Q(h : x) - Q(h : y)
// where Q is entanglement (E2) or discord with measurements on the non-hub
// side (D2(h|.)). On a pure state the one-vs-two term is S2 of the hub's
// marginal for both measures.

#include <array>
#include <optional>

#include "gaussia/measurement.hpp"
#include "gaussia/renyi.hpp"
#include "gaussia/unruh.hpp"

namespace gaussia {

struct ResidualTerms {
  std::size_t hub = 0;
  std::size_t first = 0;   ///< lower-indexed other mode
  std::size_t second = 0;  ///< higher-indexed other mode
  double one_vs_two = 0.0;
  double hub_first = 0.0;
  double hub_second = 0.0;
  double residual = 0.0;
};

/// Discord residual; throws NotPure for mixed input.
ResidualTerms residual_discord_terms(const CovarianceMatrix& sigma3, std::size_t hub,
                                     const MeasurementSearch& search = {});
double residual_discord(const CovarianceMatrix& sigma3, std::size_t hub,
                        const MeasurementSearch& search = {});

/// Entanglement residual using the convex-roof estimator for both two-mode
/// terms, unless `known_hub_first` supplies E2(hub : first) from elsewhere.
ResidualTerms residual_entanglement_terms(const CovarianceMatrix& sigma3, std::size_t hub,
                                          const EntanglementOptions& options = {},
                                          std::optional<double> known_hub_first = std::nullopt);
double residual_entanglement(const CovarianceMatrix& sigma3, std::size_t hub,
                             const EntanglementOptions& options = {});

enum class ResidualQuantity { entanglement, discord };

struct HubMinimum {
  std::size_t hub = 0;
  double value = 0.0;
  std::array<double, 3> residuals{};
};

/// Evaluates the residual for every hub and returns the smallest; residuals
/// within 1e-9 of each other tie and the lower mode index wins.
HubMinimum minimize_over_hub(const CovarianceMatrix& sigma3, ResidualQuantity quantity,
                             const EntanglementOptions& entanglement = {},
                             const MeasurementSearch& search = {});

/// All terms of the setting-a equality between residual entanglement and
/// residual discord with Rob's mode R as the hub.
struct TripartiteReport {
  double e2_R_vs_ARbar = 0.0;
  double e2_R_A = 0.0;
  double e2_R_Rbar = 0.0;
  double d2_R_given_ARbar = 0.0;
  double d2_R_given_A = 0.0;
  double d2_R_given_Rbar = 0.0;
  double residual_entanglement = 0.0;
  double residual_discord = 0.0;
};

/// E2(R:A) is taken from the closed form, E2(R:Rbar) from the estimator.
TripartiteReport tripartite_report(double s, double r, const EntanglementOptions& options = {},
                                   const MeasurementSearch& search = {});

}  // namespace gaussia
