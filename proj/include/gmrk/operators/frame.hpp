#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gmrk/coupling/clebsch_gordan.hpp"
#include "gmrk/coupling/irrep.hpp"

namespace gmrk::operators {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Cartesian index pair (a, b), zero-based, a < b.
struct CartesianPair {
  int a = 0;
  int b = 0;
  bool operator==(const CartesianPair&) const = default;
};

/// One spherical component of the adjoint {1,1}: SU(2) factor and projection.
struct AdjointComponent {
  int factor = 0;
  coupling::HalfInt mu;
  std::string label() const;
};

/// Unitary intertwiners between Cartesian index pairs and spherical components.
///
/// Adjoint: M_lambda = sum_{a<b} adjoint(lambda, p(a,b)) M_ab.
/// Symmetric traceless {2}: symmetric_basis()[mu] is the Cartesian matrix S^mu
/// of the spherical basis vector |{2} mu>, Frobenius-orthonormal; an operator
/// family satisfies T_mu = sum_ab S^mu_ab T_ab and T_ab = sum_mu conj(S^mu_ab) T_mu,
/// where T_ab is the operator of the matrix (E_ab + E_ba)/2 - delta_ab I/n.
class TensorComponentMap {
 public:
  TensorComponentMap(int n, DenseMatrix adjoint, std::vector<DenseMatrix> symmetric);

  int n() const { return n_; }
  int adjoint_size() const { return static_cast<int>(adjoint_.rows()); }
  int symmetric_size() const { return static_cast<int>(symmetric_.size()); }
  const DenseMatrix& adjoint() const { return adjoint_; }
  const std::vector<DenseMatrix>& symmetric_basis() const { return symmetric_; }

  /// Coefficient of M_lambda in M_ab (any a != b; antisymmetric in a, b).
  Complex adjoint_to_cartesian(int lambda, int a, int b) const;
  /// Coefficient of M_ab (a < b) in M_lambda.
  Complex cartesian_to_adjoint(int lambda, int a, int b) const;
  /// Coefficient of T_mu in T_ab.
  Complex symmetric_to_cartesian(int mu, int a, int b) const;
  /// Coefficient of T_ab in T_mu (summed over all ordered a, b).
  Complex cartesian_to_symmetric(int mu, int a, int b) const;

  /// Spherical components of a symmetric traceless matrix.
  DenseVector symmetric_components(const DenseMatrix& cartesian) const;
  /// Inverse of symmetric_components.
  DenseMatrix symmetric_matrix(const DenseVector& components) const;

  int pair_index(int a, int b) const;

 private:
  int n_;
  DenseMatrix adjoint_;
  std::vector<DenseMatrix> symmetric_;
};

/// Subalgebra of so(n) given by real generator coefficients over the a<b pairs.
struct LittleGroup {
  std::string name;
  std::vector<Eigen::VectorXd> generators;

  /// Spin(m) x Spin(n-m): rotations inside the first m and the last n-m axes.
  static LittleGroup spin_split(int n, int m_split);
  /// U(n/2) for even n: generators commuting with the standard complex structure.
  static LittleGroup unitary(int n);
};

/// The so(n) conventions for n = 3, 4: Cartesian generators M_ab = i(E_ab - E_ba),
/// the SU(2)-factor embedding, spherical components and the tensor maps.
///
/// n=3: (J_x, J_y, J_z) = (M_23, M_13, M_12), so M_0 = M_12.
/// n=4: J as for n=3 on axes 1..3, N = (M_14, -M_24, M_34),
///      A = (J+N)/2, B = (J-N)/2, components sqrt(2) A_mu, sqrt(2) B_mu.
/// Under PhaseConvention::reversed the spherical components and magnetic
/// bases pick up (-1)^{1-mu} and (-1)^{j-m}.
class Frame {
 public:
  /// Shared, immutable frame; throws ConfigError for n outside {3, 4}.
  static std::shared_ptr<const Frame> get(int n, coupling::PhaseConvention conv = coupling::PhaseConvention::condon_shortley);

  int n() const { return n_; }
  int factor_count() const { return n_ == 3 ? 1 : 2; }
  coupling::PhaseConvention convention() const { return conv_; }

  const std::vector<CartesianPair>& pairs() const { return pairs_; }
  const std::vector<AdjointComponent>& adjoint_components() const { return adjoint_components_; }
  /// {2} magnetic components in magnetic_states order.
  const std::vector<coupling::Magnetic>& symmetric_components() const { return symmetric_components_; }
  const TensorComponentMap& tensor_map() const { return *map_; }

  /// i(E_ab - E_ba) in the defining representation.
  DenseMatrix defining_generator(int a, int b) const;
  /// Spherical generator lambda in the defining representation.
  DenseMatrix defining_spherical_generator(int lambda) const;
  /// Columns: Condon-Shortley basis |{1} nu> of the defining representation.
  const DenseMatrix& vector_basis() const { return vector_basis_; }

  /// Spherical generators on irrep J: <m'|M_lambda|m> = red * cg(j_f m_f; 1 mu | j_f m'_f).
  std::vector<DenseMatrix> irrep_generators(const coupling::IrrepLabel& J) const;
  /// The generator with pair coefficients `coeffs` on irrep J.
  DenseMatrix irrep_generator(const coupling::IrrepLabel& J, const Eigen::VectorXd& coeffs) const;
  /// The generator with pair coefficients `coeffs` on the {2} spherical components.
  DenseMatrix symmetric_generator(const Eigen::VectorXd& coeffs) const;

 private:
  Frame(int n, coupling::PhaseConvention conv);

  int n_;
  coupling::PhaseConvention conv_;
  std::vector<CartesianPair> pairs_;
  std::vector<AdjointComponent> adjoint_components_;
  std::vector<coupling::Magnetic> symmetric_components_;
  DenseMatrix vector_basis_;
  std::unique_ptr<TensorComponentMap> map_;
};

}  // namespace gmrk::operators
