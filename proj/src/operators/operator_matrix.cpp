#include "gmrk/operators/operator_matrix.hpp"

namespace gmrk::operators {

void prune(SparseMatrix& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Complex& z) { return std::abs(z) > kPruneThreshold; });
  m.makeCompressed();
}

OperatorMatrix::OperatorMatrix(std::shared_ptr<const repspace::BasisIndex> basis, SparseMatrix matrix, TensorTag tag)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), tag_(std::move(tag)) {
  prune(matrix_);
}

OperatorMatrix OperatorMatrix::with_matrix(SparseMatrix m, TensorTag tag) const {
  return OperatorMatrix(basis_, std::move(m), std::move(tag));
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix ab = a * b;
  SparseMatrix ba = b * a;
  return ab - ba;
}

double max_abs_on(const SparseMatrix& m, const std::vector<int>& keep) {
  std::vector<char> mask(static_cast<size_t>(m.rows()), 0);
  for (int k : keep) mask[static_cast<size_t>(k)] = 1;
  double worst = 0.0;
  for (int r = 0; r < m.outerSize(); ++r) {
    if (!mask[static_cast<size_t>(r)]) continue;
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      if (mask[static_cast<size_t>(it.col())]) worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

}  // namespace gmrk::operators
