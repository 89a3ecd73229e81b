#include "gaussia/tripartite.hpp"

#include <cmath>

#include "gaussia/closed_forms.hpp"
#include "gaussia/error.hpp"

namespace gaussia {

namespace {

constexpr double kHubTie = 1e-9;
constexpr double kPurityTolerance = 1e-6;

ResidualTerms skeleton(const CovarianceMatrix& sigma3, std::size_t hub) {
  if (sigma3.modes() != 3) throw InvalidArgument("residuals need a three-mode state");
  if (hub >= 3) throw InvalidArgument("hub mode out of range");
  if (!is_pure(sigma3, kPurityTolerance)) throw NotPure("residuals need a pure three-mode state");
  ResidualTerms t;
  t.hub = hub;
  t.first = hub == 0 ? 1 : 0;
  t.second = hub == 2 ? 1 : 2;
  t.one_vs_two = 0.5 * partial_trace(sigma3, ModePartition::keep({hub})).log_determinant();
  return t;
}

CovarianceMatrix pair(const CovarianceMatrix& sigma3, std::size_t hub, std::size_t other) {
  return partial_trace(sigma3, ModePartition::keep({hub, other}));
}

const ModePartition& hub_split() {
  static const ModePartition p = ModePartition::bipartite({0}, {1});
  return p;
}

}  // namespace

ResidualTerms residual_discord_terms(const CovarianceMatrix& sigma3, std::size_t hub,
                                     const MeasurementSearch& search) {
  ResidualTerms t = skeleton(sigma3, hub);
  t.hub_first = discord(pair(sigma3, hub, t.first), hub_split(), Side::B, search).value.value();
  t.hub_second = discord(pair(sigma3, hub, t.second), hub_split(), Side::B, search).value.value();
  t.residual = t.one_vs_two - t.hub_first - t.hub_second;
  return t;
}

double residual_discord(const CovarianceMatrix& sigma3, std::size_t hub,
                        const MeasurementSearch& search) {
  return residual_discord_terms(sigma3, hub, search).residual;
}

ResidualTerms residual_entanglement_terms(const CovarianceMatrix& sigma3, std::size_t hub,
                                          const EntanglementOptions& options,
                                          std::optional<double> known_hub_first) {
  ResidualTerms t = skeleton(sigma3, hub);
  t.hub_first = known_hub_first
                    ? *known_hub_first
                    : entanglement_estimate(pair(sigma3, hub, t.first), hub_split(), options)
                          .value.value();
  t.hub_second =
      entanglement_estimate(pair(sigma3, hub, t.second), hub_split(), options).value.value();
  t.residual = t.one_vs_two - t.hub_first - t.hub_second;
  return t;
}

double residual_entanglement(const CovarianceMatrix& sigma3, std::size_t hub,
                             const EntanglementOptions& options) {
  return residual_entanglement_terms(sigma3, hub, options).residual;
}

HubMinimum minimize_over_hub(const CovarianceMatrix& sigma3, ResidualQuantity quantity,
                             const EntanglementOptions& entanglement,
                             const MeasurementSearch& search) {
  HubMinimum out;
  for (std::size_t hub = 0; hub < 3; ++hub) {
    out.residuals[hub] = quantity == ResidualQuantity::discord
                             ? residual_discord(sigma3, hub, search)
                             : residual_entanglement(sigma3, hub, entanglement);
  }
  out.hub = 0;
  out.value = out.residuals[0];
  for (std::size_t hub = 1; hub < 3; ++hub) {
    if (out.residuals[hub] < out.value - kHubTie) {
      out.hub = hub;
      out.value = out.residuals[hub];
    }
  }
  return out;
}

TripartiteReport tripartite_report(double s, double r, const EntanglementOptions& options,
                                   const MeasurementSearch& search) {
  const CovarianceMatrix sigma3 = setting_a(s, r);
  const auto ent = residual_entanglement_terms(sigma3, modes::R, options, closed::e2(s, 0.0, r));
  const auto dis = residual_discord_terms(sigma3, modes::R, search);
  TripartiteReport rep;
  rep.e2_R_vs_ARbar = ent.one_vs_two;
  rep.e2_R_A = ent.hub_first;
  rep.e2_R_Rbar = ent.hub_second;
  rep.d2_R_given_ARbar = dis.one_vs_two;
  rep.d2_R_given_A = dis.hub_first;
  rep.d2_R_given_Rbar = dis.hub_second;
  rep.residual_entanglement = ent.residual;
  rep.residual_discord = dis.residual;
  return rep;
}

}  // namespace gaussia
