#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nclp/embed.hpp"
#include "nclp/qubit_family.hpp"

namespace nclp {

struct PhaseDiagramRequest {
  double p_min = 1.0;
  double p_max = 3.0;
  double p_step = 0.1;
  double theta_step = 0.01;
  bool with_family = false;
  qubit::ScanConfig scan{};
  int threads = 0;

  void validate() const;
};

struct PhaseDiagramRow {
  double p;
  double theta;
  RegionStatus region;
  /// Qubit-family maximum of the norm lower bound, only for p < 2 when requested.
  std::optional<double> family_max;
};

/// Grid values start + k * step up to stop (inclusive within 1e-9 * step), snapped
/// to 12 significant digits so that e.g. 1 + 3 * 0.1 is exactly the double 1.3.
std::vector<double> grid_values(double start, double stop, double step);

/// Cells are computed in parallel; rows are ordered by (p, theta).
std::vector<PhaseDiagramRow> sweep_phase_diagram(const PhaseDiagramRequest& req);
std::vector<PhaseDiagramRow> sweep_phase_diagram_serial(const PhaseDiagramRequest& req);

/// CSV with header "p,theta,status,source,family_max"; doubles in shortest
/// round-trip form, family_max empty when absent.
std::string phase_diagram_csv(const std::vector<PhaseDiagramRow>& rows);

}  // namespace nclp
