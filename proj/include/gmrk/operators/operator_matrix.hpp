#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "gmrk/operators/frame.hpp"
#include "gmrk/repspace/basis.hpp"

namespace gmrk::operators {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Entries at or below this magnitude are dropped.
inline constexpr double kPruneThreshold = 1e-14;

enum class TensorKind {
  scalar,
  adjoint,            // spherical component of {1,1}
  symmetric,          // spherical component of {2}
  adjoint_cartesian,  // M_ab, component a*n+b
  symmetric_cartesian // T_ab, component a*n+b
};

struct TensorTag {
  TensorKind kind = TensorKind::scalar;
  int component = 0;
  /// Operator symbol: "M", "K", "U", "T", "C2K", ...
  std::string name;
  /// "+1", "A-1", "0;1", "12"; empty for scalars.
  std::string component_label;
  /// Multiplied by i by to_su_n.
  bool su_n = false;

  std::string label() const { return component_label.empty() ? name : name + "_" + component_label; }
};

/// Complex sparse matrix over an ordered basis, tagged with its tensor character.
class OperatorMatrix {
 public:
  OperatorMatrix(std::shared_ptr<const repspace::BasisIndex> basis, SparseMatrix matrix, TensorTag tag);

  const repspace::BasisIndex& basis() const { return *basis_; }
  const std::shared_ptr<const repspace::BasisIndex>& basis_ptr() const { return basis_; }
  const SparseMatrix& matrix() const { return matrix_; }
  const TensorTag& tag() const { return tag_; }

  int size() const { return static_cast<int>(matrix_.rows()); }
  Complex at(int row, int col) const { return matrix_.coeff(row, col); }
  /// Same basis, new entries (pruned).
  OperatorMatrix with_matrix(SparseMatrix m, TensorTag tag) const;

 private:
  std::shared_ptr<const repspace::BasisIndex> basis_;
  SparseMatrix matrix_;
  TensorTag tag_;
};

/// A component family: spherical (ordered as the frame's components) or
/// Cartesian (n*n entries, index a*n+b).
using OperatorFamily = std::vector<OperatorMatrix>;

/// Drops entries with |z| <= kPruneThreshold.
void prune(SparseMatrix& m);

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// max |m_ij| over i, j in `keep` (sorted positions); 0 for an empty set.
double max_abs_on(const SparseMatrix& m, const std::vector<int>& keep);

}  // namespace gmrk::operators
