#include "gmrk/operators/builders.hpp"

#include <cmath>
#include <map>

#include "gmrk/coupling/clebsch_gordan.hpp"
#include "gmrk/errors.hpp"

namespace gmrk::operators {

using coupling::HalfInt;
using coupling::Magnetic;
using coupling::Rational;
using repspace::BasisIndex;
using repspace::Sector;
using Triplets = std::vector<Eigen::Triplet<Complex>>;

namespace {

std::string signed_str(HalfInt h) { return h.twice() > 0 ? "+" + h.to_string() : h.to_string(); }

std::string adjoint_label(const Frame& frame, int lambda) {
  const AdjointComponent& c = frame.adjoint_components()[static_cast<size_t>(lambda)];
  if (frame.n() == 3) return signed_str(c.mu);
  return std::string(c.factor == 0 ? "A" : "B") + signed_str(c.mu);
}

std::string symmetric_label(const Frame& frame, int mu) {
  const Magnetic& m = frame.symmetric_components()[static_cast<size_t>(mu)];
  if (m.count() == 1) return signed_str(m.part(0));
  return signed_str(m.part(0)) + ";" + signed_str(m.part(1));
}

SparseMatrix from_triplets(int size, const Triplets& t) {
  SparseMatrix m(size, size);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

class GeneratorCache {
 public:
  explicit GeneratorCache(const Frame& frame) : frame_(frame) {}
  const std::vector<DenseMatrix>& get(const IrrepLabel& J) {
    auto it = cache_.find(J);
    if (it == cache_.end()) it = cache_.emplace(J, frame_.irrep_generators(J)).first;
    return it->second;
  }

 private:
  const Frame& frame_;
  std::map<IrrepLabel, std::vector<DenseMatrix>> cache_;
};

double dim_ratio_sqrt(const IrrepLabel& J, const IrrepLabel& Jp) {
  return std::sqrt(static_cast<double>(coupling::dim(J)) / coupling::dim(Jp));
}

bool couples_through_symmetric(const IrrepLabel& J, const IrrepLabel& S, const IrrepLabel& Jp) {
  for (int f = 0; f < J.factor_count(); ++f) {
    if (!coupling::triangle(J.part(f), S.part(f), Jp.part(f))) return false;
  }
  return true;
}

// C(J {2} J'; v x v') = sum_xi x_xi sum_{k,k'} cg(J k {2} xi | J' k') v_k conj(v'_k').
Complex invariant_coupling(const Frame& frame, const Sector& a, const DenseVector& va, const Sector& b,
                           const DenseVector& vb, const DenseVector& x) {
  const IrrepLabel S = IrrepLabel::symmetric_tensor(frame.n());
  const auto ks = coupling::magnetic_states(a.J);
  Complex acc = 0.0;
  for (int xi = 0; xi < x.size(); ++xi) {
    if (std::abs(x(xi)) < kPruneThreshold) continue;
    const Magnetic& xm = frame.symmetric_components()[static_cast<size_t>(xi)];
    for (size_t i = 0; i < ks.size(); ++i) {
      const Complex vk = va(static_cast<int>(i));
      if (vk == 0.0) continue;
      Magnetic kp = ks[i];
      for (int f = 0; f < kp.count(); ++f) kp.set_part(f, kp.part(f) + xm.part(f));
      const int j = coupling::magnetic_position(b.J, kp);
      if (j < 0) continue;
      const double c = coupling::cg_product(a.J, ks[i], S, xm, b.J, kp, frame.convention());
      if (c != 0.0) acc += x(xi) * c * vk * std::conj(vb(j));
    }
  }
  return acc;
}

// Fills entries coef(sector pair) * C_inv * cg(J m {2} mu | J' m') for every mu.
template <typename Coefficient>
std::vector<Triplets> assemble_symmetric(const BasisIndex& basis, const DenseVector& x, Coefficient coef) {
  const Frame& frame = basis.frame();
  const IrrepLabel S = IrrepLabel::symmetric_tensor(frame.n());
  const auto& comps = frame.symmetric_components();
  std::vector<Triplets> out(comps.size());
  for (const Sector& a : basis.sectors()) {
    for (const Sector& b : basis.sectors()) {
      if (!couples_through_symmetric(a.J, S, b.J)) continue;
      const Complex scale = coef(a.J, b.J);
      if (scale == 0.0) continue;
      for (size_t ca = 0; ca < a.columns.size(); ++ca) {
        for (size_t cb = 0; cb < b.columns.size(); ++cb) {
          const Complex kel = invariant_coupling(frame, a, a.columns[ca].vector, b, b.columns[cb].vector, x);
          if (std::abs(kel) < kPruneThreshold) continue;
          for (size_t mu = 0; mu < comps.size(); ++mu) {
            for (int i = 0; i < a.block_size(); ++i) {
              Magnetic mp = a.m_states[static_cast<size_t>(i)];
              for (int f = 0; f < mp.count(); ++f) mp.set_part(f, mp.part(f) + comps[mu].part(f));
              const int j = coupling::magnetic_position(b.J, mp);
              if (j < 0) continue;
              const double c = coupling::cg_product(a.J, a.m_states[static_cast<size_t>(i)], S, comps[mu], b.J, mp,
                                                    frame.convention());
              if (c == 0.0) continue;
              out[mu].emplace_back(b.position(static_cast<int>(cb), j), a.position(static_cast<int>(ca), i),
                                   scale * kel * c);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

OperatorFamily build_M(const BasisPtr& basis) {
  const Frame& frame = basis->frame();
  GeneratorCache gens(frame);
  const size_t count = frame.adjoint_components().size();
  std::vector<Triplets> t(count);
  for (const Sector& sec : basis->sectors()) {
    const auto& g = gens.get(sec.J);
    for (size_t lambda = 0; lambda < count; ++lambda) {
      const DenseMatrix& gl = g[lambda];
      for (int c = 0; c < static_cast<int>(sec.columns.size()); ++c) {
        for (int r = 0; r < gl.rows(); ++r) {
          for (int s = 0; s < gl.cols(); ++s) {
            if (std::abs(gl(r, s)) > kPruneThreshold) t[lambda].emplace_back(sec.position(c, r), sec.position(c, s), gl(r, s));
          }
        }
      }
    }
  }
  OperatorFamily out;
  for (size_t lambda = 0; lambda < count; ++lambda) {
    TensorTag tag{TensorKind::adjoint, static_cast<int>(lambda), "M", adjoint_label(frame, static_cast<int>(lambda))};
    out.emplace_back(basis, from_triplets(basis->size(), t[lambda]), tag);
  }
  return out;
}

OperatorFamily build_K(const BasisPtr& basis) {
  const Frame& frame = basis->frame();
  GeneratorCache gens(frame);
  const size_t count = frame.adjoint_components().size();
  std::vector<Triplets> t(count);
  for (const Sector& sec : basis->sectors()) {
    const auto& g = gens.get(sec.J);
    for (size_t lambda = 0; lambda < count; ++lambda) {
      for (int c = 0; c < static_cast<int>(sec.columns.size()); ++c) {
        const DenseVector kv = g[lambda] * sec.columns[static_cast<size_t>(c)].vector;
        for (int cp = 0; cp < static_cast<int>(sec.columns.size()); ++cp) {
          const Complex el = sec.columns[static_cast<size_t>(cp)].vector.dot(kv);
          if (std::abs(el) <= kPruneThreshold) continue;
          for (int i = 0; i < sec.block_size(); ++i) t[lambda].emplace_back(sec.position(cp, i), sec.position(c, i), el);
        }
      }
    }
  }
  OperatorFamily out;
  for (size_t lambda = 0; lambda < count; ++lambda) {
    TensorTag tag{TensorKind::adjoint, static_cast<int>(lambda), "K", adjoint_label(frame, static_cast<int>(lambda))};
    out.emplace_back(basis, from_triplets(basis->size(), t[lambda]), tag);
  }
  return out;
}

OperatorMatrix build_casimir_K(const BasisPtr& basis) {
  GeneratorCache gens(basis->frame());
  Triplets t;
  for (const Sector& sec : basis->sectors()) {
    const auto& g = gens.get(sec.J);
    const int nc = static_cast<int>(sec.columns.size());
    for (int c = 0; c < nc; ++c) {
      for (int cp = 0; cp < nc; ++cp) {
        Complex el = 0.0;
        for (const DenseMatrix& gl : g) {
          el += (gl * sec.columns[static_cast<size_t>(cp)].vector).dot(gl * sec.columns[static_cast<size_t>(c)].vector);
        }
        if (std::abs(el) <= kPruneThreshold) continue;
        for (int i = 0; i < sec.block_size(); ++i) t.emplace_back(sec.position(cp, i), sec.position(c, i), el);
      }
    }
  }
  return OperatorMatrix(basis, from_triplets(basis->size(), t), TensorTag{TensorKind::scalar, 0, "C2K", ""});
}

OperatorMatrix build_casimir_M(const BasisPtr& basis) {
  GeneratorCache gens(basis->frame());
  Triplets t;
  for (const Sector& sec : basis->sectors()) {
    const auto& g = gens.get(sec.J);
    DenseMatrix block = DenseMatrix::Zero(sec.block_size(), sec.block_size());
    for (const DenseMatrix& gl : g) block += gl.adjoint() * gl;
    for (int c = 0; c < static_cast<int>(sec.columns.size()); ++c) {
      for (int r = 0; r < block.rows(); ++r) {
        for (int s = 0; s < block.cols(); ++s) {
          if (std::abs(block(r, s)) > kPruneThreshold) t.emplace_back(sec.position(c, r), sec.position(c, s), block(r, s));
        }
      }
    }
  }
  return OperatorMatrix(basis, from_triplets(basis->size(), t), TensorTag{TensorKind::scalar, 0, "C2M", ""});
}

Rational exact_casimir_block(const IrrepLabel& J, coupling::PhaseConvention conv) {
  // sum over components of |<m'|M_lambda|m>|^2 at the lowest m; the
  // spherical normalization is 1 (n=3) or 2 (n=4) times j_f(j_f+1) cg^2.
  const Rational norm2 = J.n() == 3 ? Rational(1) : Rational(2);
  const Magnetic m = coupling::magnetic_states(J).front();
  Rational total = 0;
  for (int f = 0; f < J.factor_count(); ++f) {
    const HalfInt j = J.part(f);
    const Rational jj = Rational(j.twice() * (j.twice() + 2), 4);
    for (int tmu = -2; tmu <= 2; tmu += 2) {
      const HalfInt mu = HalfInt::from_twice(tmu);
      const HalfInt mp = m.part(f) + mu;
      if (mp.twice() > j.twice() || mp.twice() < -j.twice()) continue;
      const auto c = coupling::cg(j, m.part(f), HalfInt::from_int(1), mu, j, mp, conv);
      total += norm2 * jj * c.radicand();
    }
  }
  return total;
}

OperatorFamily build_U(const BasisPtr& basis, const GellMannConfig& cfg) {
  const Frame& frame = basis->frame();
  cfg.validate(frame);
  if (!cfg.allow_noninvariant_x) {
    const double v = little_group_violation(frame, cfg.m_split, cfg.x);
    if (v > 1e-12) {
      throw ConfigError("x is not invariant under the little group (residual " + std::to_string(v) + ")");
    }
  }
  auto t = assemble_symmetric(*basis, cfg.x, [&](const IrrepLabel& J, const IrrepLabel& Jp) {
    return Complex(cfg.u_norm * dim_ratio_sqrt(J, Jp));
  });
  OperatorFamily out;
  for (size_t mu = 0; mu < t.size(); ++mu) {
    TensorTag tag{TensorKind::symmetric, static_cast<int>(mu), "U", symmetric_label(frame, static_cast<int>(mu))};
    out.emplace_back(basis, from_triplets(basis->size(), t[mu]), tag);
  }
  return out;
}

OperatorFamily build_T_gellmann(const OperatorFamily& U, const OperatorMatrix& casimir_K, const GellMannConfig& cfg) {
  OperatorFamily out;
  const Complex a = cfg.alpha / cfg.u_norm;
  const Complex s = cfg.sigma / cfg.u_norm;
  for (const OperatorMatrix& u : U) {
    SparseMatrix t = a * commutator(casimir_K.matrix(), u.matrix());
    t += s * u.matrix();
    TensorTag tag = u.tag();
    tag.name = "T";
    out.push_back(u.with_matrix(std::move(t), tag));
  }
  return out;
}

OperatorFamily build_T_gellmann(const BasisPtr& basis, const GellMannConfig& cfg) {
  return build_T_gellmann(build_U(basis, cfg), build_casimir_K(basis), cfg);
}

OperatorFamily build_T_closed(const BasisPtr& basis, const GellMannConfig& cfg) {
  if (basis->spec().mode != repspace::SpaceMode::coset) {
    throw UnsupportedSpaceError("the closed-form T is defined only on the coset space");
  }
  const Frame& frame = basis->frame();
  cfg.validate(frame);
  auto t = assemble_symmetric(*basis, cfg.x, [&](const IrrepLabel& J, const IrrepLabel& Jp) {
    const double dc = static_cast<double>(coupling::casimir2(Jp) - coupling::casimir2(J));
    return cfg.alpha * dim_ratio_sqrt(J, Jp) * (dc + cfg.sigma);
  });
  OperatorFamily out;
  for (size_t mu = 0; mu < t.size(); ++mu) {
    TensorTag tag{TensorKind::symmetric, static_cast<int>(mu), "T", symmetric_label(frame, static_cast<int>(mu))};
    out.emplace_back(basis, from_triplets(basis->size(), t[mu]), tag);
  }
  return out;
}

OperatorFamily spherical_to_cartesian(const OperatorFamily& spherical) {
  if (spherical.empty()) throw MissingComponentError("empty operator family");
  const auto& basis = spherical.front().basis_ptr();
  const Frame& frame = basis->frame();
  const TensorComponentMap& map = frame.tensor_map();
  const TensorKind kind = spherical.front().tag().kind;
  int expected = 0;
  if (kind == TensorKind::adjoint) expected = map.adjoint_size();
  else if (kind == TensorKind::symmetric) expected = map.symmetric_size();
  else throw MissingComponentError("family is not a spherical adjoint or {2} family");
  if (static_cast<int>(spherical.size()) != expected) {
    throw MissingComponentError("spherical family has " + std::to_string(spherical.size()) + " of " +
                                std::to_string(expected) + " components");
  }
  const int n = frame.n();
  OperatorFamily out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      SparseMatrix acc(basis->size(), basis->size());
      for (int c = 0; c < expected; ++c) {
        const Complex w = kind == TensorKind::adjoint ? map.adjoint_to_cartesian(c, a, b) : map.symmetric_to_cartesian(c, a, b);
        if (std::abs(w) > 1e-15) acc += w * spherical[static_cast<size_t>(c)].matrix();
      }
      TensorTag tag{kind == TensorKind::adjoint ? TensorKind::adjoint_cartesian : TensorKind::symmetric_cartesian, a * n + b,
                    spherical.front().tag().name, std::to_string(a + 1) + std::to_string(b + 1),
                    spherical.front().tag().su_n};
      out.emplace_back(basis, std::move(acc), tag);
    }
  }
  return out;
}

OperatorFamily cartesian_to_spherical(const OperatorFamily& cartesian) {
  if (cartesian.empty()) throw MissingComponentError("empty operator family");
  const auto& basis = cartesian.front().basis_ptr();
  const Frame& frame = basis->frame();
  const TensorComponentMap& map = frame.tensor_map();
  const int n = frame.n();
  const TensorKind kind = cartesian.front().tag().kind;
  if (kind != TensorKind::adjoint_cartesian && kind != TensorKind::symmetric_cartesian) {
    throw MissingComponentError("family is not a Cartesian family");
  }
  if (static_cast<int>(cartesian.size()) != n * n) {
    throw MissingComponentError("Cartesian family has " + std::to_string(cartesian.size()) + " of " +
                                std::to_string(n * n) + " components");
  }
  for (int i = 0; i < n * n; ++i) {
    const TensorTag& tag = cartesian[static_cast<size_t>(i)].tag();
    if (tag.kind != kind || tag.component != i) {
      throw MissingComponentError("Cartesian component " + std::to_string(i / n + 1) + std::to_string(i % n + 1) +
                                  " is missing");
    }
  }
  const bool adjoint = kind == TensorKind::adjoint_cartesian;
  const int count = adjoint ? map.adjoint_size() : map.symmetric_size();
  OperatorFamily out;
  for (int c = 0; c < count; ++c) {
    SparseMatrix acc(basis->size(), basis->size());
    for (int a = 0; a < n; ++a) {
      for (int b = adjoint ? a + 1 : 0; b < n; ++b) {
        const Complex w = adjoint ? map.cartesian_to_adjoint(c, a, b) : map.cartesian_to_symmetric(c, a, b);
        if (std::abs(w) > 1e-15) acc += w * cartesian[static_cast<size_t>(a * n + b)].matrix();
      }
    }
    TensorTag tag{adjoint ? TensorKind::adjoint : TensorKind::symmetric, c, cartesian.front().tag().name,
                  adjoint ? adjoint_label(frame, c) : symmetric_label(frame, c), cartesian.front().tag().su_n};
    out.emplace_back(basis, std::move(acc), tag);
  }
  return out;
}

OperatorFamily to_su_n(const OperatorFamily& family) {
  OperatorFamily out;
  for (const OperatorMatrix& op : family) {
    TensorTag tag = op.tag();
    tag.su_n = true;
    out.push_back(op.with_matrix(Complex(0, 1) * op.matrix(), tag));
  }
  return out;
}

}  // namespace gmrk::operators
