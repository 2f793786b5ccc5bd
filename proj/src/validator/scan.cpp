#include "gmrk/validator/scan.hpp"

#include <future>

namespace gmrk::validator {

using operators::DenseMatrix;
using operators::DenseVector;

std::string to_string(XChoice x) { return x == XChoice::standard ? "standard" : "perturbed"; }

bool ScanEntry::expected_pass() const {
  return space.mode == repspace::SpaceMode::coset && x == XChoice::standard;
}

std::string ScanEntry::key() const {
  return "n=" + std::to_string(space.n) + " " + repspace::to_string(space.mode) + " m=" + std::to_string(space.m_split) +
         " x=" + to_string(x);
}

DenseVector perturbed_x(const operators::Frame& frame, int m_split) {
  const int n = frame.n();
  DenseMatrix w = DenseMatrix::Zero(n, n);
  w(0, n - 1) = w(n - 1, 0) = 1.0 / std::sqrt(2.0);
  DenseVector x = operators::x_vector_of(frame, m_split) + 0.1 * frame.tensor_map().symmetric_components(w);
  return x / x.norm();
}

std::vector<ScanEntry> default_grid(int n, HalfInt j_max, Complex sigma) {
  std::vector<ScanEntry> out;
  for (auto mode : {repspace::SpaceMode::full, repspace::SpaceMode::coset}) {
    for (int m = 1; m < n; ++m) out.push_back({{n, j_max, mode, m}, XChoice::standard, sigma});
  }
  for (int m = 1; m < n; ++m) out.push_back({{n, j_max, repspace::SpaceMode::coset, m}, XChoice::perturbed, sigma});
  return out;
}

std::vector<ScanRow> validity_scan(const std::vector<ScanEntry>& entries, double tolerance, HalfInt margin,
                                   coupling::PhaseConvention conv) {
  auto run = [=](const ScanEntry& e) {
    auto basis = repspace::enumerate_basis(e.space, conv);
    auto cfg = GellMannConfig::standard(basis->frame(), e.space.m_split, e.sigma);
    if (e.x == XChoice::perturbed) {
      cfg.x = perturbed_x(basis->frame(), e.space.m_split);
      cfg.allow_noninvariant_x = true;
    }
    ScanRow row{e, check_TT(basis, cfg, operators::build_T_gellmann(basis, cfg), margin, tolerance), false};
    row.report.expectation = e.expected_pass() ? Expectation::pass : Expectation::fail;
    if (row.report.config) row.report.config->x_choice = to_string(e.x);
    row.agrees = e.expected_pass() ? row.report.pass : row.report.max_abs_residual >= kFailThreshold;
    return row;
  };
  std::vector<std::future<ScanRow>> jobs;
  for (const ScanEntry& e : entries) jobs.push_back(std::async(std::launch::async, run, e));
  std::vector<ScanRow> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace gmrk::validator
