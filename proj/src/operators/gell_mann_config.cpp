#include "gmrk/operators/gell_mann_config.hpp"

#include <cmath>

#include "gmrk/errors.hpp"

namespace gmrk::operators {

namespace {

void check_split(int n, int m_split) {
  if (m_split < 1 || m_split > n - 1) {
    throw ConfigError("m_split must satisfy 1 <= m_split <= n-1 (n=" + std::to_string(n) +
                      ", m_split=" + std::to_string(m_split) + ")");
  }
}

}  // namespace

double alpha_of(int n, int m_split) {
  check_split(n, m_split);
  return 0.5 * std::sqrt(static_cast<double>(m_split * (n - m_split)) / n);
}

coupling::CgValue alpha_exact(int n, int m_split) {
  check_split(n, m_split);
  return coupling::CgValue::sqrt_of(coupling::Rational(m_split * (n - m_split), 4 * n));
}

DenseMatrix x_matrix_of(int n, int m_split) {
  check_split(n, m_split);
  const double scale = std::sqrt(static_cast<double>(m_split * (n - m_split)) / n);
  DenseMatrix x = DenseMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) x(a, a) = a < m_split ? scale / m_split : -scale / (n - m_split);
  return x;
}

DenseVector x_vector_of(const Frame& frame, int m_split) {
  return frame.tensor_map().symmetric_components(x_matrix_of(frame.n(), m_split));
}

double little_group_violation(const Frame& frame, int m_split, const DenseVector& x) {
  double worst = 0.0;
  for (const auto& g : LittleGroup::spin_split(frame.n(), m_split).generators) {
    worst = std::max(worst, (frame.symmetric_generator(g) * x).cwiseAbs().maxCoeff());
  }
  return worst;
}

GellMannConfig GellMannConfig::standard(const Frame& frame, int m_split, Complex sigma) {
  GellMannConfig cfg;
  cfg.n = frame.n();
  cfg.m_split = m_split;
  cfg.sigma = sigma;
  cfg.alpha = alpha_of(frame.n(), m_split);
  cfg.x = x_vector_of(frame, m_split);
  return cfg;
}

GellMannConfig GellMannConfig::with_sigma(Complex s) const {
  GellMannConfig out = *this;
  out.sigma = s;
  return out;
}

void GellMannConfig::validate(const Frame& frame) const {
  if (n != frame.n()) throw ConfigError("config n does not match the basis");
  check_split(n, m_split);
  if (x.size() != frame.tensor_map().symmetric_size()) throw ConfigError("x has the wrong number of components");
  if (std::abs(x.norm() - 1.0) > 1e-12) throw ConfigError("x must have unit norm");
  if (!(u_norm > 0.0)) throw ConfigError("|u| must be positive");
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be non-negative");
}

}  // namespace gmrk::operators
