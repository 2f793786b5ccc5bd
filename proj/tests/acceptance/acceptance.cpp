// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gmrk/coupling/cg_value.hpp"
#include "gmrk/coupling/clebsch_gordan.hpp"
#include "gmrk/operators/builders.hpp"
#include "gmrk/operators/gell_mann_config.hpp"
#include "gmrk/repspace/basis.hpp"
#include "gmrk/validator/checks.hpp"
#include "gmrk/validator/scan.hpp"

using namespace gmrk;
using coupling::CgValue;
using coupling::HalfInt;
using coupling::IrrepLabel;
using coupling::Rational;
using repspace::SpaceMode;
using repspace::SpaceSpec;

namespace {

int failures = 0;

void criterion(int k, bool pass, const std::string& detail) {
  std::printf("CRITERION %d: %s %s\n", k, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

const HalfInt kJmax = HalfInt::from_int(8);
const HalfInt kMargin = HalfInt::from_int(4);

void casimirs() {
  bool ok = true;
  std::ostringstream d;
  const std::vector<std::pair<int, int>> cases{{2, 6}, {1, 2}, {3, 12}};
  for (const auto& [j, expected] : cases) {
    const auto J = IrrepLabel::spin3(HalfInt::from_int(j));
    const Rational label_value = coupling::casimir2(J);
    const Rational block = operators::exact_casimir_block(J, coupling::PhaseConvention::condon_shortley);
    ok = ok && label_value == expected && block == expected;
    d << "j=" << j << ":" << block << " ";
  }
  criterion(1, ok, d.str());
}

void alphas() {
  const CgValue a31 = operators::alpha_exact(3, 1);
  const CgValue a42 = operators::alpha_exact(4, 2);
  const bool ok = a31 == CgValue::sqrt_of(Rational(1, 6)) && a42 == CgValue::sqrt_of(Rational(1, 4)) &&
                  std::abs(operators::alpha_of(3, 1) - 0.5 * std::sqrt(2.0 / 3.0)) < 1e-15 &&
                  operators::alpha_of(4, 2) == 0.5;
  criterion(2, ok, "alpha(3,1)=" + a31.to_string() + " alpha(4,2)=" + a42.to_string());
}

void coset_validity() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int m : {1, 2}) {
    const auto basis = repspace::enumerate_basis(SpaceSpec{3, kJmax, SpaceMode::coset, m});
    for (double s : {0.0, 1.0, 2.5}) {
      const auto cfg = operators::GellMannConfig::standard(basis->frame(), m, s);
      const auto T = operators::build_T_gellmann(basis, cfg);
      worst = std::max(worst, validator::check_TT(basis, cfg, T, kMargin, 1e-9).max_abs_residual);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  criterion(3, worst <= 1e-9 && secs < 60.0, "max TT residual " + sci(worst) + " in " + sci(secs) + " s");
}

void full_invalidity() {
  double least = INFINITY;
  for (int m : {1, 2}) {
    const auto basis = repspace::enumerate_basis(SpaceSpec{3, kJmax, SpaceMode::full, m});
    const auto cfg = operators::GellMannConfig::standard(basis->frame(), m);
    const auto T = operators::build_T_gellmann(basis, cfg);
    least = std::min(least, validator::check_TT(basis, cfg, T, kMargin).max_abs_residual);
  }
  criterion(4, least >= 1e-2, "min full-space TT residual " + sci(least));
}

void equivalence() {
  bool ok = true;
  std::ostringstream d;
  for (int m : {1, 2}) {
    const auto basis = repspace::enumerate_basis(SpaceSpec{3, kJmax, SpaceMode::coset, m});
    const auto cfg = operators::GellMannConfig::standard(basis->frame(), m);
    const auto fit = validator::fit_T_equivalence(basis, cfg, kMargin, 1e-10);
    ok = ok && !fit.inconclusive && fit.report.max_abs_residual <= 1e-10 && fit.off_diagonal_residual <= 1e-10;
    d << "m=" << m << ": residual " << sci(fit.report.max_abs_residual) << " off-diagonal "
      << sci(fit.off_diagonal_residual) << " a=" << sci(fit.a.real()) << " ";
  }
  criterion(5, ok, d.str());
}

void multiplicity() {
  bool ok = true;
  int bases = 0;
  const std::vector<std::pair<int, std::vector<int>>> splits{{3, {1, 2}}, {4, {1, 2, 3}}};
  for (const auto& [n, ms] : splits) {
    for (int m : ms) {
      const HalfInt jmax = n == 3 ? kJmax : HalfInt::from_int(4);
      const auto basis = repspace::enumerate_basis(SpaceSpec{n, jmax, SpaceMode::coset, m});
      for (const auto& [J, count] : repspace::multiplicity_audit(*basis)) ok = ok && count == 1 && !J.is_spinorial();
      ++bases;
    }
  }
  criterion(6, ok, std::to_string(bases) + " coset bases audited");
}

double cg_orthogonality_error(int tj_max) {
  double worst = 0.0;
  for (int tj1 = 0; tj1 <= tj_max; ++tj1) {
    for (int tj2 = 0; tj2 <= tj_max; ++tj2) {
      for (int tm = -(tj1 + tj2); tm <= tj1 + tj2; tm += 2) {
        // sum_{m1} <j1 m1 j2 m-m1|j m><j1 m1 j2 m-m1|j' m> = delta_jj'
        for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
          for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2) {
            if (std::abs(tm) > tj || std::abs(tm) > tjp) continue;
            double sum = 0.0;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tm - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum += coupling::cg_double(tj1, tm1, tj2, tm2, tj, tm) * coupling::cg_double(tj1, tm1, tj2, tm2, tjp, tm);
            }
            worst = std::max(worst, std::abs(sum - (tj == tjp ? 1.0 : 0.0)));
          }
        }
      }
    }
  }
  return worst;
}

bool cg_exchange_symmetric(int tj_max) {
  for (int tj1 = 0; tj1 <= tj_max; ++tj1) {
    for (int tj2 = 0; tj2 <= tj_max; ++tj2) {
      for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
        const bool odd = ((tj1 + tj2 - tj) / 2) % 2 != 0;
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            if (std::abs(tm1 + tm2) > tj) continue;
            const auto h = HalfInt::from_twice;
            const CgValue a = coupling::cg(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm1 + tm2));
            const CgValue b = coupling::cg(h(tj2), h(tm2), h(tj1), h(tm1), h(tj), h(tm1 + tm2));
            if (!(a == (odd ? -b : b))) return false;
          }
        }
      }
    }
  }
  return true;
}

void foundation() {
  const double ortho = cg_orthogonality_error(8);
  const bool sym = cg_exchange_symmetric(8);
  bool ok = ortho <= 1e-12 && sym;
  std::ostringstream d;
  d << "CG orthogonality " << sci(ortho) << (sym ? " symmetry exact" : " symmetry broken");
  const std::vector<std::pair<SpaceSpec, HalfInt>> cases{
      {SpaceSpec{3, kJmax, SpaceMode::full, 1}, kMargin},
      {SpaceSpec{4, HalfInt::from_int(4), SpaceMode::full, 2}, HalfInt::from_int(2)}};
  for (const auto& [spec, margin] : cases) {
    const auto basis = repspace::enumerate_basis(spec);
    const auto mk = validator::check_MK(basis);
    const auto cas = validator::check_casimir(basis);
    const auto cfg = operators::GellMannConfig::standard(basis->frame(), spec.m_split);
    const auto uu = validator::check_UU(basis, cfg, margin);
    ok = ok && mk.pass && cas.pass && uu.pass && uu.max_abs_residual <= 1e-10;
    d << "; n=" << spec.n << " MK " << sci(mk.max_abs_residual) << " casimir " << sci(cas.max_abs_residual)
      << " UU " << sci(uu.max_abs_residual);
  }
  criterion(7, ok, d.str());
}

void truncation_stability() {
  const auto classify = [](HalfInt jmax) {
    std::map<std::string, bool> out;
    for (double s : {0.0, 1.0}) {
      for (const auto& row : validator::validity_scan(validator::default_grid(3, jmax, s))) {
        out[row.entry.key() + " sigma=" + std::to_string(s)] = row.report.pass;
      }
    }
    return out;
  };
  const auto at6 = classify(HalfInt::from_int(6));
  const auto at8 = classify(HalfInt::from_int(8));
  int passing = 0;
  for (const auto& [key, pass] : at8) passing += pass ? 1 : 0;
  criterion(8, at6 == at8 && !at8.empty(),
            std::to_string(at8.size()) + " configurations, " + std::to_string(passing) + " passing at both cutoffs");
}

}  // namespace

int main() {
  casimirs();
  alphas();
  coset_validity();
  full_invalidity();
  equivalence();
  multiplicity();
  foundation();
  truncation_stability();
  return failures == 0 ? 0 : 1;
}
