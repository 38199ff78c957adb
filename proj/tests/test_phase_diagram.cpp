#include <sstream>

#include "doctest.h"

#include "nclp/phase_diagram.hpp"

using namespace nclp;

TEST_CASE("grid_values snaps decimal steps") {
  const auto g = grid_values(1.0, 2.0, 0.1);
  REQUIRE(g.size() == 11);
  CHECK(g[3] == 1.3);
  CHECK(g[10] == 2.0);
  CHECK(grid_values(0.0, 1.0, 0.01).size() == 101);
  CHECK(grid_values(1.0, 1.0, 0.5).size() == 1);
  CHECK_THROWS_AS(grid_values(1.0, 0.5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(grid_values(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("default sweep shape and known cells") {
  const auto rows = sweep_phase_diagram(PhaseDiagramRequest{});
  CHECK(rows.size() == 21 * 101);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].p < rows[i].p || (rows[i - 1].p == rows[i].p && rows[i - 1].theta < rows[i].theta);
    CHECK(ordered);
  }
  for (const auto& r : rows) {
    CHECK(r.region == classify_region(r.p, r.theta));
    CHECK_FALSE(r.family_max.has_value());
  }
}

TEST_CASE("family column agrees with the status") {
  PhaseDiagramRequest req;
  req.p_max = 2.2;
  req.theta_step = 0.05;
  req.with_family = true;
  for (const auto& r : sweep_phase_diagram(req)) {
    if (r.p >= 2.0) {
      CHECK_FALSE(r.family_max.has_value());
      continue;
    }
    REQUIRE(r.family_max.has_value());
    if (r.region.status == Region::Unbounded) CHECK(*r.family_max > 1.0);
    if (r.region.status == Region::Bounded) CHECK(*r.family_max <= 1.0 + 1e-12);
  }
}

TEST_CASE("CSV format and determinism") {
  PhaseDiagramRequest req;
  req.p_max = 1.6;
  req.with_family = true;
  const std::string a = phase_diagram_csv(sweep_phase_diagram(req));
  const std::string b = phase_diagram_csv(sweep_phase_diagram_serial(req));
  req.threads = 3;
  const std::string c = phase_diagram_csv(sweep_phase_diagram(req));
  CHECK(a == b);
  CHECK(a == c);
  std::istringstream in(a);
  std::string line;
  std::getline(in, line);
  CHECK(line == "p,theta,status,source,family_max");
  std::getline(in, line);
  CHECK(line.rfind("1,0,unbounded,Thm61,", 0) == 0);
  CHECK(a.find("\n1.5,0.1,unbounded,Thm61,") != std::string::npos);
  CHECK(a.find("\n1.5,0.4,bounded,Thm43,") != std::string::npos);
  CHECK(a.find("\n1.5,0.5,bounded,HJXHalf,") != std::string::npos);
  CHECK(a.find("\n1.5,0.2,unknown,None,") != std::string::npos);
}

TEST_CASE("request validation") {
  PhaseDiagramRequest req;
  req.p_min = 0.5;
  CHECK_THROWS_AS(sweep_phase_diagram(req), std::invalid_argument);
  req = {};
  req.p_max = 0.9;
  CHECK_THROWS_AS(sweep_phase_diagram(req), std::invalid_argument);
  req = {};
  req.theta_step = 0.0;
  CHECK_THROWS_AS(sweep_phase_diagram(req), std::invalid_argument);
}
