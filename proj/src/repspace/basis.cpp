#include "gmrk/repspace/basis.hpp"

#include <Eigen/Eigenvalues>

#include "gmrk/errors.hpp"

namespace gmrk::repspace {

using operators::DenseMatrix;
using operators::DenseVector;

namespace {

constexpr double kNullTolerance = 1e-9;

void fix_phase(DenseVector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

std::vector<KColumn> full_columns(const IrrepLabel& J) {
  const auto ks = coupling::magnetic_states(J);
  std::vector<KColumn> out;
  for (size_t i = 0; i < ks.size(); ++i) {
    KColumn c;
    c.label.k = ks[i];
    c.vector = DenseVector::Unit(static_cast<int>(ks.size()), static_cast<int>(i));
    out.push_back(std::move(c));
  }
  return out;
}

// Null space of sum_alpha K_alpha^dagger K_alpha over the L generators.
std::vector<KColumn> coset_columns(const operators::Frame& frame, const IrrepLabel& J,
                                   const operators::LittleGroup& little) {
  const int d = coupling::dim(J);
  DenseMatrix h = DenseMatrix::Zero(d, d);
  for (const auto& g : little.generators) {
    const DenseMatrix k = frame.irrep_generator(J, g);
    h += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(h);
  std::vector<KColumn> out;
  for (int i = 0; i < d; ++i) {
    if (eig.eigenvalues()(i) > kNullTolerance) continue;
    KColumn c;
    c.label.invariant = true;
    c.label.slot = static_cast<int>(out.size());
    c.vector = eig.eigenvectors().col(i);
    fix_phase(c.vector);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::string to_string(SpaceMode mode) { return mode == SpaceMode::full ? "full" : "coset"; }

SpaceMode parse_space_mode(const std::string& text) {
  if (text == "full") return SpaceMode::full;
  if (text == "coset") return SpaceMode::coset;
  throw ConfigError("unknown mode '" + text + "' (expected full or coset)");
}

std::string KLabel::to_string() const {
  if (!invariant) return k.to_string();
  return slot == 0 ? "0" : "0#" + std::to_string(slot);
}

std::string BasisState::to_string() const {
  return "|" + J.to_string() + "; " + k.to_string() + "; " + m.to_string() + ">";
}

BasisIndex::BasisIndex(SpaceSpec spec, std::shared_ptr<const operators::Frame> frame, std::vector<Sector> sectors)
    : spec_(spec), frame_(std::move(frame)), sectors_(std::move(sectors)) {
  int pos = 0;
  for (size_t s = 0; s < sectors_.size(); ++s) {
    Sector& sec = sectors_[s];
    sec.offset = pos;
    for (const KColumn& col : sec.columns) {
      for (const Magnetic& m : sec.m_states) {
        BasisState st{sec.J, col.label, m};
        lookup_.emplace(st.to_string(), pos++);
        states_.push_back(std::move(st));
        sector_of_.push_back(static_cast<int>(s));
      }
    }
  }
}

std::optional<int> BasisIndex::position(const BasisState& s) const {
  auto it = lookup_.find(s.to_string());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const BasisIndex> enumerate_basis(const SpaceSpec& spec, coupling::PhaseConvention conv) {
  auto frame = operators::Frame::get(spec.n, conv);
  if (spec.j_max.twice() < 0) throw ConfigError("j_max must be non-negative");
  std::optional<operators::LittleGroup> little;
  if (spec.mode == SpaceMode::coset) little = operators::LittleGroup::spin_split(spec.n, spec.m_split);

  std::vector<Sector> sectors;
  for (const IrrepLabel& J : coupling::labels_up_to(spec.n, spec.j_max)) {
    Sector sec;
    sec.J = J;
    sec.columns = little ? coset_columns(*frame, J, *little) : full_columns(J);
    if (sec.columns.empty()) continue;
    sec.m_states = coupling::magnetic_states(J);
    sectors.push_back(std::move(sec));
  }
  return std::make_shared<const BasisIndex>(spec, std::move(frame), std::move(sectors));
}

std::vector<int> interior_projector(const BasisIndex& index, HalfInt margin) {
  if (margin.twice() < 0) throw ConfigError("margin must be non-negative");
  const HalfInt cutoff = index.spec().j_max - margin;
  std::vector<int> out;
  for (int p = 0; p < index.size(); ++p) {
    if (index.state(p).J.level() <= cutoff) out.push_back(p);
  }
  return out;
}

std::map<IrrepLabel, int> multiplicity_audit(const BasisIndex& index) {
  std::map<IrrepLabel, int> out;
  for (const Sector& sec : index.sectors()) out[sec.J] += static_cast<int>(sec.columns.size());
  return out;
}

}  // namespace gmrk::repspace
