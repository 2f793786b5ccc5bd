#pragma once

#include "gmrk/coupling/cg_value.hpp"
#include "gmrk/coupling/half_int.hpp"
#include "gmrk/coupling/irrep.hpp"

namespace gmrk::coupling {

/// Global phase convention for SU(2) coupling coefficients.
///
/// `reversed` multiplies every coefficient by (-1)^{j1+j2-j}; it is the
/// Condon-Shortley convention in the rephased basis |j m> -> (-1)^{j-m}|j m>.
enum class PhaseConvention { condon_shortley, reversed };

/// <j1 m1; j2 m2 | j m>, exact, via Racah's single-sum formula.
///
/// Zero when m1+m2 != m or the triangle rule fails. Throws InvalidLabelError
/// for negative j, |m| > j, or j-m not an integer.
CgValue cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m,
           PhaseConvention conv = PhaseConvention::condon_shortley);

/// cg() in double precision, memoized. Arguments are twice the labels.
double cg_double(int tj1, int tm1, int tj2, int tm2, int tj, int tm,
                 PhaseConvention conv = PhaseConvention::condon_shortley);

/// Spin(4) coefficient as the product of the two SU(2) factor coefficients.
/// Throws InvalidLabelError when any label is not an n=4 label.
CgValue cg_spin4(const IrrepLabel& J1, const Magnetic& x1, const IrrepLabel& J2, const Magnetic& x2,
                 const IrrepLabel& J, const Magnetic& x, PhaseConvention conv = PhaseConvention::condon_shortley);

/// Rank-generic product coefficient in double precision (n=3: one factor; n=4: two).
double cg_product(const IrrepLabel& J1, const Magnetic& x1, const IrrepLabel& J2, const Magnetic& x2,
                  const IrrepLabel& J, const Magnetic& x, PhaseConvention conv = PhaseConvention::condon_shortley);

/// True when j1 (x) j2 contains j.
bool triangle(HalfInt j1, HalfInt j2, HalfInt j);

}  // namespace gmrk::coupling
