#pragma once

// CSV snapshots and JSON run metadata for the bench tool.

#include <iomanip>
#include <limits>
#include <locale>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eweno/problems.hpp"
#include "json.hpp"

#ifndef EWENO_VERSION
#define EWENO_VERSION "unknown"
#endif

namespace eweno::bench {

inline std::ostream& imbue_classic(std::ostream& os) {
  os.imbue(std::locale::classic());
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  return os;
}

/// Header `x,<names>[,ref_<names>]`, one row per cell centre.
inline void write_snapshot_csv(std::ostream& os, const CaseOutput& out) {
  imbue_classic(os);
  os << "x";
  for (const auto& n : out.names) os << ',' << n;
  if (!out.reference.empty())
    for (const auto& n : out.names) os << ",ref_" << n;
  os << '\n';
  for (int j = 0; j < out.grid.n(); ++j) {
    const auto jj = static_cast<std::size_t>(j);
    os << out.grid.center(j);
    for (const auto& col : out.columns) os << ',' << col[jj];
    for (const auto& col : out.reference) os << ',' << col[jj];
    os << '\n';
  }
}

inline void write_spectral_csv(std::ostream& os, const SpectralCurve& c) {
  imbue_classic(os);
  os << "phi,kstar_re,kstar_im,amp,phase\n";
  for (std::size_t i = 0; i < c.phi.size(); ++i)
    os << c.phi[i] << ',' << c.kstar_re[i] << ',' << c.kstar_im[i] << ',' << c.amp[i] << ',' << c.phase[i] << '\n';
}

inline void write_convergence_csv(std::ostream& os, const ConvergenceTable& t) {
  imbue_classic(os);
  os << "n,error,order\n";
  for (const auto& r : t.rows) os << r.n << ',' << r.error << ',' << r.order << '\n';
}

[[nodiscard]] inline nlohmann::json tableau_json(const ReconstructionTableau& t) {
  nlohmann::json j;
  j["name"] = t.name;
  j["form"] = to_string(t.form);
  j["eps"] = t.eps;
  j["p"] = t.p;
  j["c2"] = t.c2;
  j["c0"] = t.c0;
  j["mu"] = t.mu;
  j["gamma"] = t.gamma;
  if (t.A) j["A"] = *t.A;
  return j;
}

[[nodiscard]] inline nlohmann::json run_metadata(const CaseOutput& out, const ReconstructionTableau& t,
                                                 const RunConfig& cfg) {
  nlohmann::json j;
  j["version"] = EWENO_VERSION;
  j["problem"] = out.problem;
  j["scheme"] = tableau_json(t);
  j["n"] = out.grid.n();
  j["x_lo"] = out.grid.x_lo();
  j["x_hi"] = out.grid.x_hi();
  j["cfl"] = cfg.cfl;
  j["t_final"] = out.t;
  j["steps"] = out.steps;
  j["wall_seconds"] = out.wall_seconds;
  j["characteristic"] = cfg.op.characteristic;
  j["interface_mean"] = cfg.op.mean == InterfaceMean::Conserved ? "conserved" : "primitive";
  j["reference"] = to_string(out.reference_kind);
  j["components"] = out.names;
  return j;
}

}  // namespace eweno::bench
