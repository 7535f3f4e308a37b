#pragma once

#include <map>
#include <string>

#include "hha/dirac.hpp"

namespace hha {

struct Bounds {
  int center_max_degree = 4;
  int homology_max_degree = 3;
  int zeta_retry_limit = 2;
};

/// A fully materialized scenario: the working extension field is computed
/// up-front from the declared roots and the pin-lift reflection norms, and
/// every object lives over that single field.
struct Scenario {
  std::string name;
  FieldPtr field;
  std::shared_ptr<const OrthogonalRep> rep;
  OrthoBasisPtr basis;
  std::shared_ptr<const HeckeAlgebra> algebra;
  std::map<std::string, ModuleAction> modules;
  std::optional<Matrix> isotropic_w;  // rows span W
  Bounds bounds;

  // recorded (non-fatal) validation outcomes, surfaced by commands
  CheckReport kappa_report;
  std::map<std::string, CheckReport> module_reports;
};

/// Loads and validates a scenario file. Structural problems (schema, floats,
/// bad group table, non-orthogonal representation) throw; kappa equivariance
/// and module relation failures are recorded for commands to report.
Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text);

}  // namespace hha
