#include "gmrk/validator/checks.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "gmrk/errors.hpp"

namespace gmrk::validator {

using operators::build_casimir_K;
using operators::build_casimir_M;
using operators::build_M;
using operators::commutator;
using operators::DenseMatrix;
using operators::max_abs_on;
using operators::SparseMatrix;

namespace {

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

const Complex kI(0, 1);

struct Cartesian {
  int n;
  OperatorFamily ops;
  const SparseMatrix& operator()(int a, int b) const { return ops[static_cast<size_t>(a * n + b)].matrix(); }
};

Cartesian cartesian(const OperatorFamily& spherical, int n) {
  return {n, operators::spherical_to_cartesian(spherical)};
}

SparseMatrix zero(int size) { return SparseMatrix(size, size); }

// Accumulates w * m when the weight is nonzero.
void add(SparseMatrix& acc, double w, const SparseMatrix& m) {
  if (w != 0.0) acc += (kI * w) * m;
}

SparseMatrix rhs_MM(const Cartesian& M, int a, int b, int c, int d, int size) {
  SparseMatrix r = zero(size);
  add(r, delta(a, d), M(b, c));
  add(r, delta(b, c), M(a, d));
  add(r, -delta(a, c), M(b, d));
  add(r, -delta(b, d), M(a, c));
  return r;
}

SparseMatrix rhs_TT(const Cartesian& M, int a, int b, int c, int d, int size) {
  SparseMatrix r = zero(size);
  add(r, delta(a, c), M(d, b));
  add(r, delta(a, d), M(c, b));
  add(r, delta(b, c), M(d, a));
  add(r, delta(b, d), M(c, a));
  return r;
}

SparseMatrix rhs_MT(const Cartesian& T, int a, int b, int c, int d, int size) {
  SparseMatrix r = zero(size);
  add(r, delta(b, c), T(a, d));
  add(r, delta(b, d), T(a, c));
  add(r, -delta(a, c), T(b, d));
  add(r, -delta(a, d), T(b, c));
  return r;
}

ResidualReport start(const std::string& name, const repspace::BasisIndex& basis, HalfInt margin,
                     const std::vector<int>& keep, double tolerance, const GellMannConfig* cfg) {
  ResidualReport r;
  r.check_name = name;
  r.interior_margin = margin;
  r.basis_size = basis.size();
  r.interior_size = static_cast<int>(keep.size());
  r.tolerance = tolerance;
  r.config = snapshot(basis, cfg);
  return r;
}

void require_same_n(const repspace::BasisIndex& basis, const GellMannConfig& cfg) {
  if (basis.frame().n() != cfg.n) throw ConfigError("config n does not match the basis");
}

// Real coefficients r_p of H = sum_p r_p G_p for Hermitian H.
Eigen::VectorXd pair_coefficients(const operators::Frame& frame, const DenseMatrix& h) {
  Eigen::VectorXd r(static_cast<int>(frame.pairs().size()));
  for (int p = 0; p < r.size(); ++p) {
    const auto& pr = frame.pairs()[static_cast<size_t>(p)];
    r(p) = 0.5 * (frame.defining_generator(pr.a, pr.b) * h).trace().real();
  }
  return r;
}

DenseMatrix defining(const operators::Frame& frame, const Eigen::VectorXd& c) {
  DenseMatrix g = DenseMatrix::Zero(frame.n(), frame.n());
  for (int p = 0; p < c.size(); ++p) {
    const auto& pr = frame.pairs()[static_cast<size_t>(p)];
    g += c(p) * frame.defining_generator(pr.a, pr.b);
  }
  return g;
}

// Sum over interior entries of conj(a_ij) b_ij.
Complex inner(const SparseMatrix& a, const SparseMatrix& b, const std::vector<char>& mask) {
  Complex s = 0.0;
  for (int r = 0; r < a.outerSize(); ++r) {
    if (!mask[static_cast<size_t>(r)]) continue;
    for (SparseMatrix::InnerIterator it(a, r); it; ++it) {
      if (mask[static_cast<size_t>(it.col())]) s += std::conj(it.value()) * b.coeff(r, it.col());
    }
  }
  return s;
}

std::vector<char> mask_of(int size, const std::vector<int>& keep) {
  std::vector<char> mask(static_cast<size_t>(size), 0);
  for (int k : keep) mask[static_cast<size_t>(k)] = 1;
  return mask;
}

}  // namespace

ConfigSnapshot snapshot(const repspace::BasisIndex& basis, const GellMannConfig* cfg) {
  ConfigSnapshot s;
  s.n = basis.spec().n;
  s.mode = repspace::to_string(basis.spec().mode);
  s.j_max = basis.spec().j_max;
  s.m_split = basis.spec().m_split;
  if (cfg) {
    s.m_split = cfg->m_split;
    s.sigma = cfg->sigma;
    s.alpha = cfg->alpha;
    s.u_norm = cfg->u_norm;
    s.x_choice = cfg->allow_noninvariant_x ? "custom" : "standard";
  }
  return s;
}

ResidualReport check_MM(const BasisPtr& basis, HalfInt margin, double tolerance) {
  const auto keep = repspace::interior_projector(*basis, margin);
  const int n = basis->frame().n();
  const Cartesian M = cartesian(build_M(basis), n);
  ResidualReport rep = start("MM closure", *basis, margin, keep, tolerance, nullptr);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const SparseMatrix r = commutator(M(a, b), M(c, d)) - rhs_MM(M, a, b, c, d, basis->size());
          rep.max_abs_residual = std::max(rep.max_abs_residual, max_abs_on(r, keep));
        }
  rep.decide();
  return rep;
}

ResidualReport check_MK(const BasisPtr& basis, HalfInt margin, double tolerance) {
  const auto keep = repspace::interior_projector(*basis, margin);
  const int n = basis->frame().n();
  const Cartesian M = cartesian(build_M(basis), n);
  const Cartesian K = cartesian(operators::build_K(basis), n);
  ResidualReport rep = start("MK commute", *basis, margin, keep, tolerance, nullptr);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          rep.max_abs_residual = std::max(rep.max_abs_residual, max_abs_on(commutator(M(a, b), K(c, d)), keep));
        }
  rep.decide();
  return rep;
}

ResidualReport check_casimir(const BasisPtr& basis, double tolerance) {
  const auto keep = repspace::interior_projector(*basis, HalfInt{});
  ResidualReport rep = start("Casimir C2K = C2M = C2(J)", *basis, HalfInt{}, keep, tolerance, nullptr);
  double exact_gap = 0.0;
  SparseMatrix expected(basis->size(), basis->size());
  std::vector<Eigen::Triplet<Complex>> diag;
  for (const auto& sec : basis->sectors()) {
    const coupling::Rational c2 = coupling::casimir2(sec.J);
    const coupling::Rational block = operators::exact_casimir_block(sec.J, basis->frame().convention());
    if (block != c2) exact_gap = std::max(exact_gap, std::abs(static_cast<double>(block - c2)));
    for (int p = sec.offset; p < sec.offset + sec.block_size() * static_cast<int>(sec.columns.size()); ++p) {
      diag.emplace_back(p, p, static_cast<double>(c2));
    }
  }
  expected.setFromTriplets(diag.begin(), diag.end());
  const SparseMatrix ck = build_casimir_K(basis).matrix();
  const SparseMatrix cm = build_casimir_M(basis).matrix();
  const double k_gap = max_abs_on(ck - expected, keep);
  const double m_gap = max_abs_on(cm - expected, keep);
  rep.details = {{"exact_rational", exact_gap}, {"C2K", k_gap}, {"C2M", m_gap}};
  rep.max_abs_residual = std::max({exact_gap, k_gap, m_gap});
  rep.decide();
  return rep;
}

ResidualReport check_UU(const BasisPtr& basis, const GellMannConfig& cfg, HalfInt margin, double tolerance) {
  require_same_n(*basis, cfg);
  const auto keep = repspace::interior_projector(*basis, margin);
  const OperatorFamily U = operators::build_U(basis, cfg);
  ResidualReport rep = start("UU commute", *basis, margin, keep, tolerance, &cfg);
  for (size_t i = 0; i < U.size(); ++i) {
    for (size_t j = i + 1; j < U.size(); ++j) {
      rep.max_abs_residual =
          std::max(rep.max_abs_residual, max_abs_on(commutator(U[i].matrix(), U[j].matrix()), keep));
    }
  }
  rep.decide();
  return rep;
}

ResidualReport check_TT(const BasisPtr& basis, const GellMannConfig& cfg, const OperatorFamily& T, HalfInt margin,
                        double tolerance) {
  require_same_n(*basis, cfg);
  const auto keep = repspace::interior_projector(*basis, margin);
  const int n = basis->frame().n();
  const Cartesian M = cartesian(build_M(basis), n);
  const Cartesian Tc = cartesian(T, n);
  ResidualReport rep = start("TT closure", *basis, margin, keep, tolerance, &cfg);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c; d < n; ++d) {
          const SparseMatrix r = commutator(Tc(a, b), Tc(c, d)) - rhs_TT(M, a, b, c, d, basis->size());
          rep.max_abs_residual = std::max(rep.max_abs_residual, max_abs_on(r, keep));
        }
  rep.decide();
  return rep;
}

ResidualReport check_MT(const BasisPtr& basis, const GellMannConfig& cfg, const OperatorFamily& T, HalfInt margin,
                        double tolerance) {
  require_same_n(*basis, cfg);
  const auto keep = repspace::interior_projector(*basis, margin);
  const int n = basis->frame().n();
  const Cartesian M = cartesian(build_M(basis), n);
  const Cartesian Tc = cartesian(T, n);
  ResidualReport rep = start("MT tensor character", *basis, margin, keep, tolerance, &cfg);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c; d < n; ++d) {
          const SparseMatrix r = commutator(M(a, b), Tc(c, d)) - rhs_MT(Tc, a, b, c, d, basis->size());
          rep.max_abs_residual = std::max(rep.max_abs_residual, max_abs_on(r, keep));
        }
  rep.decide();
  return rep;
}

ResidualReport check_jacobi(const BasisPtr& basis, const GellMannConfig& cfg, const OperatorFamily& T, HalfInt margin,
                            double tolerance) {
  require_same_n(*basis, cfg);
  const auto keep = repspace::interior_projector(*basis, margin);
  const int n = basis->frame().n();
  const int size = basis->size();
  const Cartesian M = cartesian(build_M(basis), n);
  const Cartesian Tc = cartesian(T, n);
  ResidualReport rep = start("Jacobi M,T,T", *basis, margin, keep, tolerance, &cfg);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = e; f < n; ++f) {
              const SparseMatrix lhs = commutator(M(a, b), rhs_TT(M, c, d, e, f, size));
              const SparseMatrix rhs = commutator(rhs_MT(Tc, a, b, c, d, size), Tc(e, f)) +
                                       commutator(Tc(c, d), rhs_MT(Tc, a, b, e, f, size));
              rep.max_abs_residual = std::max(rep.max_abs_residual, max_abs_on(lhs - rhs, keep));
            }
  rep.decide();
  return rep;
}

ResidualReport check_little_group_conditions(const operators::Frame& frame, int m_split,
                                             const operators::DenseVector& x, double tolerance) {
  const auto little = operators::LittleGroup::spin_split(frame.n(), m_split);
  const int np = static_cast<int>(frame.pairs().size());
  Eigen::MatrixXd lmat(np, static_cast<int>(little.generators.size()));
  for (int i = 0; i < lmat.cols(); ++i) lmat.col(i) = little.generators[static_cast<size_t>(i)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(lmat, Eigen::ComputeFullU);
  const int rank = static_cast<int>((svd.singularValues().array() > 1e-10).count());
  const Eigen::MatrixXd l_basis = svd.matrixU().leftCols(rank);
  const Eigen::MatrixXd n_basis = svd.matrixU().rightCols(np - rank);
  const Eigen::MatrixXd p_l = l_basis * l_basis.transpose();
  const Eigen::MatrixXd p_n = n_basis * n_basis.transpose();

  // [G1, G2] = i H with H Hermitian; returns the coefficients of H.
  auto bracket = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const DenseMatrix g1 = defining(frame, u);
    const DenseMatrix g2 = defining(frame, v);
    return pair_coefficients(frame, Complex(0, -1) * (g1 * g2 - g2 * g1));
  };
  double pair_gap = 0.0;
  for (int i = 0; i < l_basis.cols(); ++i) {
    for (int j = 0; j < l_basis.cols(); ++j) pair_gap = std::max(pair_gap, (p_n * bracket(l_basis.col(i), l_basis.col(j))).cwiseAbs().maxCoeff());
    for (int j = 0; j < n_basis.cols(); ++j) pair_gap = std::max(pair_gap, (p_l * bracket(l_basis.col(i), n_basis.col(j))).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < n_basis.cols(); ++i)
    for (int j = 0; j < n_basis.cols(); ++j) pair_gap = std::max(pair_gap, (p_n * bracket(n_basis.col(i), n_basis.col(j))).cwiseAbs().maxCoeff());

  const double x_gap = operators::little_group_violation(frame, m_split, x);
  ResidualReport rep;
  rep.check_name = "little group conditions";
  rep.tolerance = tolerance;
  rep.details = {{"symmetric_pair", pair_gap}, {"x_annihilation", x_gap}};
  rep.max_abs_residual = std::max(pair_gap, x_gap);
  rep.decide();
  return rep;
}

EquivalenceFit fit_T_equivalence(const BasisPtr& basis, const GellMannConfig& cfg, HalfInt margin, double tolerance) {
  require_same_n(*basis, cfg);
  const auto keep = repspace::interior_projector(*basis, margin);
  const auto mask = mask_of(basis->size(), keep);
  const OperatorFamily U = operators::build_U(basis, cfg);
  const operators::OperatorMatrix c2k = build_casimir_K(basis);
  const auto gm = [&](Complex s) { return operators::build_T_gellmann(U, c2k, cfg.with_sigma(s)); };
  const OperatorFamily closed0 = operators::build_T_closed(basis, cfg.with_sigma(0.0));
  const OperatorFamily closed1 = operators::build_T_closed(basis, cfg.with_sigma(1.0));

  std::vector<SparseMatrix> slope;
  double slope_norm2 = 0.0;
  for (size_t mu = 0; mu < closed0.size(); ++mu) {
    slope.push_back(closed1[mu].matrix() - closed0[mu].matrix());
    slope_norm2 += inner(slope.back(), slope.back(), mask).real();
  }

  EquivalenceFit fit;
  fit.report = start("T equivalence (fitted sigma)", *basis, margin, keep, tolerance, &cfg);

  const OperatorFamily gm0 = gm(0.0);
  for (size_t mu = 0; mu < gm0.size(); ++mu) {
    const SparseMatrix diff = gm0[mu].matrix() - closed0[mu].matrix();
    for (int r = 0; r < diff.outerSize(); ++r) {
      if (!mask[static_cast<size_t>(r)]) continue;
      for (SparseMatrix::InnerIterator it(diff, r); it; ++it) {
        if (!mask[static_cast<size_t>(it.col())]) continue;
        if (basis->state(r).J == basis->state(static_cast<int>(it.col())).J) continue;
        fit.off_diagonal_residual = std::max(fit.off_diagonal_residual, std::abs(it.value()));
      }
    }
  }

  if (slope_norm2 == 0.0) {
    fit.inconclusive = true;
    fit.report.max_abs_residual = fit.off_diagonal_residual;
    fit.report.details = {{"off_diagonal_no_fit", fit.off_diagonal_residual}};
    fit.report.decide();
    return fit;
  }

  // Best sigma_closed for a given T_gellmann(sigma): projection onto the slope.
  auto best_sigma = [&](const OperatorFamily& target) {
    Complex num = 0.0;
    for (size_t mu = 0; mu < target.size(); ++mu) {
      num += inner(slope[mu], target[mu].matrix() - closed0[mu].matrix(), mask);
    }
    return num / slope_norm2;
  };
  auto misfit = [&](const OperatorFamily& target, Complex s) {
    double worst = 0.0;
    for (size_t mu = 0; mu < target.size(); ++mu) {
      const SparseMatrix model = closed0[mu].matrix() + s * slope[mu];
      worst = std::max(worst, max_abs_on(target[mu].matrix() - model, keep));
    }
    return worst;
  };

  const Complex s0 = best_sigma(gm0);
  const OperatorFamily gm1 = gm(1.0);
  const Complex s1 = best_sigma(gm1);
  fit.a = s1 - s0;
  fit.b = s0;
  const Complex probe = 2.5;
  const double r_probe = misfit(gm(probe), fit.a * probe + fit.b);
  const double r_fit = std::max(misfit(gm0, s0), misfit(gm1, s1));
  fit.report.max_abs_residual = std::max({r_probe, r_fit, fit.off_diagonal_residual});
  fit.report.details = {{"a_re", fit.a.real()},
                        {"a_im", fit.a.imag()},
                        {"b_re", fit.b.real()},
                        {"b_im", fit.b.imag()},
                        {"off_diagonal_no_fit", fit.off_diagonal_residual},
                        {"validation_sigma_2.5", r_probe}};
  fit.report.decide();
  return fit;
}

}  // namespace gmrk::validator
