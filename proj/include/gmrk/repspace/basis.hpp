#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gmrk/coupling/irrep.hpp"
#include "gmrk/operators/frame.hpp"

namespace gmrk::repspace {

using coupling::HalfInt;
using coupling::IrrepLabel;
using coupling::Magnetic;

enum class SpaceMode { full, coset };

std::string to_string(SpaceMode mode);
/// "full" or "coset"; throws ConfigError otherwise.
SpaceMode parse_space_mode(const std::string& text);

struct SpaceSpec {
  int n = 3;
  HalfInt j_max = HalfInt::from_int(2);
  SpaceMode mode = SpaceMode::full;
  /// Split of the little group Spin(m) x Spin(n-m); only read in coset mode.
  int m_split = 1;
};

/// Left (k) label of a basis function. In full mode a magnetic multi-index;
/// in coset mode the slot of an L-invariant vector, printed "0".
struct KLabel {
  bool invariant = false;
  Magnetic k;
  int slot = 0;

  std::string to_string() const;
  auto operator<=>(const KLabel&) const = default;
};

/// |J; k m>
struct BasisState {
  IrrepLabel J;
  KLabel k;
  Magnetic m;

  std::string to_string() const;
  bool operator==(const BasisState&) const = default;
};

/// One k-column of an irrep sector: its label and its unit vector in the
/// magnetic basis of J (a unit vector in full mode).
struct KColumn {
  KLabel label;
  operators::DenseVector vector;
};

/// All columns of one irrep J, with the position of the first state.
struct Sector {
  IrrepLabel J;
  std::vector<KColumn> columns;
  std::vector<Magnetic> m_states;
  int offset = 0;

  int block_size() const { return static_cast<int>(m_states.size()); }
  /// Position of state (column c, m index i).
  int position(int column, int m_index) const { return offset + column * block_size() + m_index; }
};

/// Ordered orthonormal basis, sorted by J, then k, then m.
class BasisIndex {
 public:
  BasisIndex(SpaceSpec spec, std::shared_ptr<const operators::Frame> frame, std::vector<Sector> sectors);

  const SpaceSpec& spec() const { return spec_; }
  const operators::Frame& frame() const { return *frame_; }
  std::shared_ptr<const operators::Frame> frame_ptr() const { return frame_; }

  int size() const { return static_cast<int>(states_.size()); }
  bool empty() const { return states_.empty(); }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(int pos) const { return states_[static_cast<size_t>(pos)]; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  /// Sector index of the state at `pos`.
  int sector_of(int pos) const { return sector_of_[static_cast<size_t>(pos)]; }
  std::optional<int> position(const BasisState& s) const;

 private:
  SpaceSpec spec_;
  std::shared_ptr<const operators::Frame> frame_;
  std::vector<Sector> sectors_;
  std::vector<BasisState> states_;
  std::vector<int> sector_of_;
  std::map<std::string, int> lookup_;
};

/// Truncated basis of L2(Spin(n)) (full) or of the coset space
/// Spin(n)/Spin(m) x Spin(n-m). Coset columns are the null vectors of the
/// left L-generators; throws ConfigError on bad n, j_max or m_split.
std::shared_ptr<const BasisIndex> enumerate_basis(
    const SpaceSpec& spec, coupling::PhaseConvention conv = coupling::PhaseConvention::condon_shortley);

/// Positions of the states with level(J) <= j_max - margin, ascending.
std::vector<int> interior_projector(const BasisIndex& index, HalfInt margin);

/// Number of k-columns per irrep present in the basis.
std::map<IrrepLabel, int> multiplicity_audit(const BasisIndex& index);

}  // namespace gmrk::repspace
