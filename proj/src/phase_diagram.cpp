#include "nclp/phase_diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "nclp/io.hpp"
#include "nclp/parallel.hpp"

namespace nclp {

namespace {

double snap(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

struct Cell {
  double p;
  double theta;
};

std::vector<Cell> cells_of(const PhaseDiagramRequest& req) {
  req.validate();
  std::vector<Cell> cells;
  for (double p : grid_values(req.p_min, req.p_max, req.p_step))
    for (double theta : grid_values(0.0, 1.0, req.theta_step)) cells.push_back({p, theta});
  return cells;
}

PhaseDiagramRow evaluate(const Cell& cell, const PhaseDiagramRequest& req) {
  PhaseDiagramRow row{cell.p, cell.theta, classify_region(cell.p, cell.theta), std::nullopt};
  if (req.with_family && cell.p < 2.0) row.family_max = qubit::family_maximum(cell.p, cell.theta, req.scan).m_value;
  return row;
}

void sort_rows(std::vector<PhaseDiagramRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const PhaseDiagramRow& a, const PhaseDiagramRow& b) {
    return a.p != b.p ? a.p < b.p : a.theta < b.theta;
  });
}

}  // namespace

void PhaseDiagramRequest::validate() const {
  if (!(p_min >= 1.0) || !(p_max >= p_min) || !std::isfinite(p_max)) {
    throw std::invalid_argument("phase diagram needs 1 <= p_min <= p_max < inf");
  }
  if (!(p_step > 0.0) || !(theta_step > 0.0)) throw std::invalid_argument("phase diagram steps must be > 0");
  if (theta_step > 1.0) throw std::invalid_argument("theta_step must be <= 1");
}

std::vector<double> grid_values(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) throw std::invalid_argument("grid_values: invalid range");
  const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) values.push_back(snap(start + static_cast<double>(k) * step));
  return values;
}

std::vector<PhaseDiagramRow> sweep_phase_diagram(const PhaseDiagramRequest& req) {
  const std::vector<Cell> cells = cells_of(req);
  std::vector<PhaseDiagramRow> rows(cells.size());
  const auto count = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_threads(req.threads))
  for (long long k = 0; k < count; ++k) rows[static_cast<std::size_t>(k)] = evaluate(cells[static_cast<std::size_t>(k)], req);
  sort_rows(rows);
  return rows;
}

std::vector<PhaseDiagramRow> sweep_phase_diagram_serial(const PhaseDiagramRequest& req) {
  std::vector<PhaseDiagramRow> rows;
  for (const Cell& cell : cells_of(req)) rows.push_back(evaluate(cell, req));
  sort_rows(rows);
  return rows;
}

std::string phase_diagram_csv(const std::vector<PhaseDiagramRow>& rows) {
  std::ostringstream out;
  out << "p,theta,status,source,family_max\n";
  for (const auto& r : rows) {
    out << io::format_double(r.p) << ',' << io::format_double(r.theta) << ',' << to_string(r.region.status) << ','
        << to_string(r.region.source) << ',';
    if (r.family_max) out << io::format_double(*r.family_max);
    out << '\n';
  }
  return out.str();
}

}  // namespace nclp
