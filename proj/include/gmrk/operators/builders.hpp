#pragma once

#include "gmrk/coupling/irrep.hpp"
#include "gmrk/operators/gell_mann_config.hpp"
#include "gmrk/operators/operator_matrix.hpp"

namespace gmrk::operators {

using coupling::IrrepLabel;
using BasisPtr = std::shared_ptr<const repspace::BasisIndex>;

/// Rotation generators on the m index, one per adjoint component.
OperatorFamily build_M(const BasisPtr& basis);
/// Left generators on the k index, projected onto the basis.
OperatorFamily build_K(const BasisPtr& basis);

/// sum_lambda K_lambda^dagger K_lambda, evaluated on the k vectors before projection.
OperatorMatrix build_casimir_K(const BasisPtr& basis);
OperatorMatrix build_casimir_M(const BasisPtr& basis);

/// Exact diagonal of sum_lambda M_lambda^dagger M_lambda on irrep J (every m gives the same value).
coupling::Rational exact_casimir_block(const IrrepLabel& J, coupling::PhaseConvention conv);

/// D-function multiplication operators U_mu, one per {2} component.
/// Throws ConfigError when x is not L-invariant (unless allowed).
OperatorFamily build_U(const BasisPtr& basis, const GellMannConfig& cfg);

/// T_mu = alpha [C2_K, U_mu] / |u| + sigma U_mu / |u|.
OperatorFamily build_T_gellmann(const BasisPtr& basis, const GellMannConfig& cfg);
/// Same, from prebuilt U and C2_K.
OperatorFamily build_T_gellmann(const OperatorFamily& U, const OperatorMatrix& casimir_K, const GellMannConfig& cfg);

/// Closed-form T on the coset space:
/// alpha sqrt(dim J / dim J') (C2(J') - C2(J) + sigma) C(J {2} J'; 0 x 0) C(J {2} J'; m mu m').
/// Throws UnsupportedSpaceError on a full-mode basis.
OperatorFamily build_T_closed(const BasisPtr& basis, const GellMannConfig& cfg);

/// Cartesian family (n*n entries, a*n+b) from a spherical adjoint or {2} family.
OperatorFamily spherical_to_cartesian(const OperatorFamily& spherical);
/// Spherical family from a complete Cartesian family; throws MissingComponentError otherwise.
OperatorFamily cartesian_to_spherical(const OperatorFamily& cartesian);

/// Each matrix times i, tagged as an su(n) generator.
OperatorFamily to_su_n(const OperatorFamily& family);

}  // namespace gmrk::operators
