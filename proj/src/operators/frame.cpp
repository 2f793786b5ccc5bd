#include "gmrk/operators/frame.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "gmrk/errors.hpp"

namespace gmrk::operators {

using coupling::HalfInt;
using coupling::IrrepLabel;
using coupling::Magnetic;
using coupling::PhaseConvention;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index_of(int n, int a, int b) {
  // Lexicographic index of (a, b), a < b.
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Eigen::VectorXcd unit_pair(int n, int a, int b) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(pair_count(n));
  v(pair_index_of(n, a, b)) = 1.0;
  return v;
}

struct FactorAxes {
  Eigen::VectorXcd x, y, z;
};

// Cartesian su(2) generators of each factor, as coefficients over pairs.
std::vector<FactorAxes> factor_axes(int n) {
  FactorAxes j{unit_pair(n, 1, 2), unit_pair(n, 0, 2), unit_pair(n, 0, 1)};
  if (n == 3) return {j};
  FactorAxes nb{unit_pair(n, 0, 3), -unit_pair(n, 1, 3), unit_pair(n, 2, 3)};
  FactorAxes a{(j.x + nb.x) / 2.0, (j.y + nb.y) / 2.0, (j.z + nb.z) / 2.0};
  FactorAxes b{(j.x - nb.x) / 2.0, (j.y - nb.y) / 2.0, (j.z - nb.z) / 2.0};
  return {a, b};
}

int reversed_sign(PhaseConvention conv, int twice_j_minus_m) {
  if (conv == PhaseConvention::condon_shortley) return 1;
  return ((twice_j_minus_m / 2) % 2 == 0) ? 1 : -1;
}

DenseMatrix combine(int n, const Eigen::VectorXcd& coeffs) {
  DenseMatrix out = DenseMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Complex c = coeffs(pair_index_of(n, a, b));
      out(a, b) += c * Complex(0, 1);
      out(b, a) -= c * Complex(0, 1);
    }
  }
  return out;
}

}  // namespace

std::string AdjointComponent::label() const {
  return factor == 0 ? mu.to_string() : "B" + mu.to_string();
}

TensorComponentMap::TensorComponentMap(int n, DenseMatrix adjoint, std::vector<DenseMatrix> symmetric)
    : n_(n), adjoint_(std::move(adjoint)), symmetric_(std::move(symmetric)) {}

int TensorComponentMap::pair_index(int a, int b) const { return pair_index_of(n_, a, b); }

Complex TensorComponentMap::adjoint_to_cartesian(int lambda, int a, int b) const {
  if (a == b) return 0.0;
  if (a < b) return std::conj(adjoint_(lambda, pair_index(a, b)));
  return -std::conj(adjoint_(lambda, pair_index(b, a)));
}

Complex TensorComponentMap::cartesian_to_adjoint(int lambda, int a, int b) const {
  if (a == b) return 0.0;
  if (a < b) return adjoint_(lambda, pair_index(a, b));
  return -adjoint_(lambda, pair_index(b, a));
}

Complex TensorComponentMap::symmetric_to_cartesian(int mu, int a, int b) const {
  return std::conj(symmetric_[static_cast<size_t>(mu)](a, b));
}

Complex TensorComponentMap::cartesian_to_symmetric(int mu, int a, int b) const {
  return symmetric_[static_cast<size_t>(mu)](a, b);
}

DenseVector TensorComponentMap::symmetric_components(const DenseMatrix& cartesian) const {
  DenseVector out(symmetric_size());
  for (int mu = 0; mu < symmetric_size(); ++mu) {
    out(mu) = (symmetric_[static_cast<size_t>(mu)].conjugate().cwiseProduct(cartesian)).sum();
  }
  return out;
}

DenseMatrix TensorComponentMap::symmetric_matrix(const DenseVector& components) const {
  DenseMatrix out = DenseMatrix::Zero(n_, n_);
  for (int mu = 0; mu < symmetric_size(); ++mu) out += components(mu) * symmetric_[static_cast<size_t>(mu)];
  return out;
}

LittleGroup LittleGroup::spin_split(int n, int m_split) {
  if (n < 2 || m_split < 1 || m_split > n - 1) {
    throw ConfigError("m_split must satisfy 1 <= m_split <= n-1 (n=" + std::to_string(n) +
                      ", m_split=" + std::to_string(m_split) + ")");
  }
  LittleGroup g;
  g.name = "Spin(" + std::to_string(m_split) + ")xSpin(" + std::to_string(n - m_split) + ")";
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((a < m_split) != (b < m_split)) continue;
      Eigen::VectorXd v = Eigen::VectorXd::Zero(pair_count(n));
      v(pair_index_of(n, a, b)) = 1.0;
      g.generators.push_back(v);
    }
  }
  return g;
}

LittleGroup LittleGroup::unitary(int n) {
  if (n % 2 != 0) throw ConfigError("U(n/2) little group needs even n");
  Eigen::MatrixXd complex_structure = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; k += 2) {
    complex_structure(k, k + 1) = 1.0;
    complex_structure(k + 1, k) = -1.0;
  }
  const int np = pair_count(n);
  Eigen::MatrixXd constraint(n * n, np);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(n, n);
      gen(a, b) = 1.0;
      gen(b, a) = -1.0;
      const Eigen::MatrixXd c = gen * complex_structure - complex_structure * gen;
      constraint.col(pair_index_of(n, a, b)) = Eigen::Map<const Eigen::VectorXd>(c.data(), n * n);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint, Eigen::ComputeFullV);
  LittleGroup g;
  g.name = "U(" + std::to_string(n / 2) + ")";
  const auto& s = svd.singularValues();
  for (int k = 0; k < np; ++k) {
    const double sv = k < s.size() ? s(k) : 0.0;
    if (sv < 1e-10) g.generators.push_back(svd.matrixV().col(k));
  }
  return g;
}

std::shared_ptr<const Frame> Frame::get(int n, PhaseConvention conv) {
  if (n != 3 && n != 4) throw ConfigError("unsupported n = " + std::to_string(n) + " (supported: 3, 4)");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Frame>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, static_cast<int>(conv)}];
  if (!slot) slot = std::shared_ptr<const Frame>(new Frame(n, conv));
  return slot;
}

Frame::Frame(int n, PhaseConvention conv) : n_(n), conv_(conv) {
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs_.push_back({a, b});
  }

  const auto axes = factor_axes(n);
  const double norm = n == 3 ? 1.0 : std::sqrt(2.0);
  DenseMatrix adjoint(pair_count(n), pair_count(n));
  int row = 0;
  for (int f = 0; f < factor_count(); ++f) {
    const auto& ax = axes[static_cast<size_t>(f)];
    for (int tmu = -2; tmu <= 2; tmu += 2) {
      Eigen::VectorXcd c;
      if (tmu == 2) c = -(ax.x + Complex(0, 1) * ax.y) * kInvSqrt2;
      if (tmu == 0) c = ax.z;
      if (tmu == -2) c = (ax.x - Complex(0, 1) * ax.y) * kInvSqrt2;
      c *= norm * reversed_sign(conv, 2 - tmu);
      adjoint.row(row++) = c.transpose();
      adjoint_components_.push_back({f, HalfInt::from_twice(tmu)});
    }
  }

  // Condon-Shortley basis of the defining representation: joint highest
  // weight, then lowering one factor at a time.
  const IrrepLabel vec = IrrepLabel::vector(n);
  const auto vec_states = coupling::magnetic_states(vec);
  DenseMatrix weight = DenseMatrix::Zero(n, n);
  std::vector<DenseMatrix> lowering;
  for (int f = 0; f < factor_count(); ++f) {
    const auto& ax = axes[static_cast<size_t>(f)];
    weight += std::pow(0.1, f) * combine(n, ax.z);
    lowering.push_back(combine(n, ax.x - Complex(0, 1) * ax.y));
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(weight);
  DenseVector top = eig.eigenvectors().col(n - 1);
  for (int k = 0; k < n; ++k) {
    if (std::abs(top(k)) > 1e-8) {
      top *= std::conj(top(k)) / std::abs(top(k));
      break;
    }
  }
  vector_basis_ = DenseMatrix::Zero(n, static_cast<int>(vec_states.size()));
  for (size_t col = 0; col < vec_states.size(); ++col) {
    const Magnetic& target = vec_states[col];
    DenseVector v = top;
    int phase_exp = 0;
    for (int f = 0; f < factor_count(); ++f) {
      const int tj = vec.part(f).twice();
      for (int tm = tj; tm > target.part(f).twice(); tm -= 2) {
        // J_- |j m> = sqrt((j+m)(j-m+1)) |j m-1>
        const double c = std::sqrt(0.25 * (tj + tm) * (tj - tm + 2));
        v = lowering[static_cast<size_t>(f)] * v / c;
      }
      phase_exp += tj - target.part(f).twice();
    }
    vector_basis_.col(static_cast<int>(col)) = v * static_cast<double>(reversed_sign(conv, phase_exp));
  }

  // {2} basis: symmetric coupling of two vectors.
  const IrrepLabel sym = IrrepLabel::symmetric_tensor(n);
  symmetric_components_ = coupling::magnetic_states(sym);
  std::vector<DenseMatrix> sym_basis;
  for (const Magnetic& mu : symmetric_components_) {
    DenseMatrix s = DenseMatrix::Zero(n, n);
    for (size_t i = 0; i < vec_states.size(); ++i) {
      for (size_t k = 0; k < vec_states.size(); ++k) {
        const double c = coupling::cg_product(vec, vec_states[i], vec, vec_states[k], sym, mu, conv);
        if (c != 0.0) {
          s += c * vector_basis_.col(static_cast<int>(i)) * vector_basis_.col(static_cast<int>(k)).transpose();
        }
      }
    }
    sym_basis.push_back(s);
  }
  map_ = std::make_unique<TensorComponentMap>(n, std::move(adjoint), std::move(sym_basis));
}

DenseMatrix Frame::defining_generator(int a, int b) const {
  DenseMatrix g = DenseMatrix::Zero(n_, n_);
  if (a == b) return g;
  g(a, b) = Complex(0, 1);
  g(b, a) = Complex(0, -1);
  return g;
}

DenseMatrix Frame::defining_spherical_generator(int lambda) const {
  return combine(n_, map_->adjoint().row(lambda).transpose());
}

std::vector<DenseMatrix> Frame::irrep_generators(const IrrepLabel& J) const {
  if (J.n() != n_) throw InvalidLabelError("label " + J.to_string() + " has the wrong rank for this frame");
  const auto states = coupling::magnetic_states(J);
  const int d = static_cast<int>(states.size());
  const double norm = n_ == 3 ? 1.0 : std::sqrt(2.0);
  std::vector<DenseMatrix> out;
  for (const AdjointComponent& comp : adjoint_components_) {
    DenseMatrix g = DenseMatrix::Zero(d, d);
    const int tj = J.part(comp.factor).twice();
    const double reduced = norm * std::sqrt(0.25 * tj * (tj + 2));
    for (int col = 0; col < d; ++col) {
      Magnetic target = states[static_cast<size_t>(col)];
      const int tm = target.part(comp.factor).twice();
      target.set_part(comp.factor, HalfInt::from_twice(tm + comp.mu.twice()));
      const int row = coupling::magnetic_position(J, target);
      if (row < 0) continue;
      g(row, col) = reduced * coupling::cg_double(tj, tm, 2, comp.mu.twice(), tj, tm + comp.mu.twice(), conv_);
    }
    out.push_back(std::move(g));
  }
  return out;
}

DenseMatrix Frame::irrep_generator(const IrrepLabel& J, const Eigen::VectorXd& coeffs) const {
  const auto gens = irrep_generators(J);
  const int d = coupling::dim(J);
  DenseMatrix out = DenseMatrix::Zero(d, d);
  for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) {
    if (coeffs(p) == 0.0) continue;
    for (int lambda = 0; lambda < static_cast<int>(gens.size()); ++lambda) {
      out += coeffs(p) * map_->adjoint_to_cartesian(lambda, pairs_[static_cast<size_t>(p)].a,
                                                    pairs_[static_cast<size_t>(p)].b) *
             gens[static_cast<size_t>(lambda)];
    }
  }
  return out;
}

DenseMatrix Frame::symmetric_generator(const Eigen::VectorXd& coeffs) const {
  return irrep_generator(IrrepLabel::symmetric_tensor(n_), coeffs);
}

}  // namespace gmrk::operators
