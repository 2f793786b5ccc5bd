#pragma once

#include "gmrk/operators/builders.hpp"
#include "gmrk/validator/report.hpp"

namespace gmrk::validator {

using operators::BasisPtr;
using operators::GellMannConfig;
using operators::OperatorFamily;

/// Snapshot of a basis and (optionally) a construction config.
ConfigSnapshot snapshot(const repspace::BasisIndex& basis, const GellMannConfig* cfg = nullptr);

/// [M_ab, M_cd] = i(d_ad M_bc + d_bc M_ad - d_ac M_bd - d_bd M_ac).
ResidualReport check_MM(const BasisPtr& basis, HalfInt margin = {}, double tolerance = kDefaultTolerance);

/// [M_ab, K_cd] = 0.
ResidualReport check_MK(const BasisPtr& basis, HalfInt margin = {}, double tolerance = kDefaultTolerance);

/// C2_K = C2_M = casimir2(J) on every block: exactly in rationals, and on
/// the assembled matrices to `tolerance`.
ResidualReport check_casimir(const BasisPtr& basis, double tolerance = 1e-12);

/// [U_mu, U_nu] = 0.
ResidualReport check_UU(const BasisPtr& basis, const GellMannConfig& cfg, HalfInt margin = HalfInt::from_int(4),
                        double tolerance = kDefaultTolerance);

/// [T_ab, T_cd] = i(d_ac M_db + d_ad M_cb + d_bc M_da + d_bd M_ca); T given spherically.
ResidualReport check_TT(const BasisPtr& basis, const GellMannConfig& cfg, const OperatorFamily& T,
                        HalfInt margin = HalfInt::from_int(4), double tolerance = kDefaultTolerance);

/// [M_ab, T_cd] = i(d_bc T_ad + d_bd T_ac - d_ac T_bd - d_ad T_bc).
ResidualReport check_MT(const BasisPtr& basis, const GellMannConfig& cfg, const OperatorFamily& T,
                        HalfInt margin = HalfInt::from_int(2), double tolerance = kDefaultTolerance);

/// [M_ab, R_TT(cd, ef)] = [R_MT(ab, cd), T_ef] + [T_cd, R_MT(ab, ef)], where R_*
/// are the structure-constant right-hand sides of check_TT and check_MT.
ResidualReport check_jacobi(const BasisPtr& basis, const GellMannConfig& cfg, const OperatorFamily& T,
                            HalfInt margin = HalfInt::from_int(4), double tolerance = 1e-9);

/// Symmetric-pair relations [L,L] in L, [L,N] in N, [N,N] in L of the split
/// so(n) = L + N, and K_alpha x = 0 in {2} for the generators of L.
ResidualReport check_little_group_conditions(const operators::Frame& frame, int m_split,
                                             const operators::DenseVector& x, double tolerance = 1e-12);

struct EquivalenceFit {
  /// sigma_closed = a * sigma_gellmann + b.
  Complex a = 0.0;
  Complex b = 0.0;
  bool inconclusive = false;
  /// max |T_gellmann - T_closed| on J' != J entries at sigma = 0, no fit.
  double off_diagonal_residual = 0.0;
  ResidualReport report;
};

/// Fits the sigma relation between build_T_gellmann and build_T_closed at
/// sigma = 0 and 1 and validates it at sigma = 2.5, on interior states.
EquivalenceFit fit_T_equivalence(const BasisPtr& basis, const GellMannConfig& cfg,
                                 HalfInt margin = HalfInt::from_int(4), double tolerance = kDefaultTolerance);

}  // namespace gmrk::validator
