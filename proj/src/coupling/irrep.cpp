#include "gmrk/coupling/irrep.hpp"

#include <algorithm>

#include "gmrk/errors.hpp"

namespace gmrk::coupling {

IrrepLabel IrrepLabel::spin3(HalfInt j) {
  if (j.twice() < 0) throw InvalidLabelError("negative spin " + j.to_string());
  return IrrepLabel(3, {j, HalfInt{}});
}

IrrepLabel IrrepLabel::spin4(HalfInt j1, HalfInt j2) {
  if (j1.twice() < 0 || j2.twice() < 0) {
    throw InvalidLabelError("negative Spin(4) label (" + j1.to_string() + "," + j2.to_string() + ")");
  }
  return IrrepLabel(4, {j1, j2});
}

IrrepLabel IrrepLabel::trivial(int n) {
  if (n == 3) return spin3(HalfInt{});
  if (n == 4) return spin4(HalfInt{}, HalfInt{});
  throw InvalidLabelError("unsupported n = " + std::to_string(n));
}

IrrepLabel IrrepLabel::from_parts(int n, std::span<const HalfInt> parts) {
  if (n == 3 && parts.size() == 1) return spin3(parts[0]);
  if (n == 4 && parts.size() == 2) return spin4(parts[0], parts[1]);
  throw InvalidLabelError("label with " + std::to_string(parts.size()) + " parts is not a Spin(" +
                          std::to_string(n) + ") label");
}

IrrepLabel IrrepLabel::symmetric_tensor(int n) {
  if (n == 3) return spin3(HalfInt::from_int(2));
  if (n == 4) return spin4(HalfInt::from_int(1), HalfInt::from_int(1));
  throw InvalidLabelError("unsupported n = " + std::to_string(n));
}

IrrepLabel IrrepLabel::vector(int n) {
  if (n == 3) return spin3(HalfInt::from_int(1));
  if (n == 4) return spin4(HalfInt::from_twice(1), HalfInt::from_twice(1));
  throw InvalidLabelError("unsupported n = " + std::to_string(n));
}

HalfInt IrrepLabel::level() const {
  return n_ == 3 ? parts_[0] : parts_[0] + parts_[1];
}

bool IrrepLabel::is_spinorial() const { return !level().is_integer(); }

std::string IrrepLabel::to_string() const {
  if (n_ == 3) return parts_[0].to_string();
  return parts_[0].to_string() + ";" + parts_[1].to_string();
}

std::string Magnetic::to_string() const {
  if (count_ == 1) return parts_[0].to_string();
  return parts_[0].to_string() + ";" + parts_[1].to_string();
}

int dim(const IrrepLabel& label) {
  int d = 1;
  for (HalfInt j : label.parts()) d *= j.twice() + 1;
  return d;
}

Rational casimir2(const IrrepLabel& label) {
  Rational total = 0;
  for (HalfInt j : label.parts()) {
    // j(j+1) = tj(tj+2)/4
    total += Rational(j.twice() * (j.twice() + 2), 4);
  }
  return label.n() == 3 ? total : 2 * total;
}

std::vector<Magnetic> magnetic_states(const IrrepLabel& label) {
  std::vector<Magnetic> out;
  out.reserve(static_cast<size_t>(dim(label)));
  if (label.n() == 3) {
    const int tj = label.part(0).twice();
    for (int tm = -tj; tm <= tj; tm += 2) out.emplace_back(HalfInt::from_twice(tm));
    return out;
  }
  const int t1 = label.part(0).twice();
  const int t2 = label.part(1).twice();
  for (int a = -t1; a <= t1; a += 2) {
    for (int b = -t2; b <= t2; b += 2) out.emplace_back(HalfInt::from_twice(a), HalfInt::from_twice(b));
  }
  return out;
}

int magnetic_position(const IrrepLabel& label, const Magnetic& m) {
  if (m.count() != label.factor_count()) return -1;
  int pos = 0;
  for (int f = 0; f < label.factor_count(); ++f) {
    const int tj = label.part(f).twice();
    const int tm = m.part(f).twice();
    if (tm < -tj || tm > tj || (tj - tm) % 2 != 0) return -1;
    pos = pos * (tj + 1) + (tm + tj) / 2;
  }
  return pos;
}

std::vector<IrrepLabel> labels_up_to(int n, HalfInt max_level) {
  std::vector<IrrepLabel> out;
  const int top = max_level.twice();
  if (top < 0) return out;
  if (n == 3) {
    for (int t = 0; t <= top; ++t) out.push_back(IrrepLabel::spin3(HalfInt::from_twice(t)));
  } else if (n == 4) {
    for (int a = 0; a <= top; ++a) {
      for (int b = 0; a + b <= top; ++b) {
        out.push_back(IrrepLabel::spin4(HalfInt::from_twice(a), HalfInt::from_twice(b)));
      }
    }
  } else {
    throw InvalidLabelError("unsupported n = " + std::to_string(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gmrk::coupling
