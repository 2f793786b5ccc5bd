#include "gmrk/coupling/clebsch_gordan.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "gmrk/errors.hpp"

namespace gmrk::coupling {

namespace {

using boost::multiprecision::cpp_int;

const cpp_int& factorial(int k) {
  static std::mutex mu;
  // deque: growth never invalidates references already handed out.
  static std::deque<cpp_int> table{cpp_int(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    table.push_back(table.back() * static_cast<int>(table.size()));
  }
  return table[static_cast<size_t>(k)];
}

void check_pair(HalfInt j, HalfInt m) {
  if (j.twice() < 0) throw InvalidLabelError("negative spin " + j.to_string());
  if ((j.twice() - m.twice()) % 2 != 0) {
    throw InvalidLabelError("projection " + m.to_string() + " has wrong parity for spin " + j.to_string());
  }
  if (m.twice() > j.twice() || m.twice() < -j.twice()) {
    throw InvalidLabelError("projection " + m.to_string() + " outside spin " + j.to_string());
  }
}

struct Key {
  std::array<int, 6> t;
  int conv;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : k.t) h = (h ^ static_cast<uint64_t>(v + 1024)) * 1099511628211ull;
    return static_cast<size_t>(h ^ static_cast<uint64_t>(k.conv));
  }
};

// Condon-Shortley value; labels already validated.
CgValue racah(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
  // All quantities below are integers because of the triangle/parity checks.
  const int a = (tj1 + tj2 - tj) / 2;
  const int b = (tj1 - tj2 + tj) / 2;
  const int c = (-tj1 + tj2 + tj) / 2;
  const int s = (tj1 + tj2 + tj) / 2 + 1;
  const int j1pm = (tj1 + tm1) / 2, j1mm = (tj1 - tm1) / 2;
  const int j2pm = (tj2 + tm2) / 2, j2mm = (tj2 - tm2) / 2;
  const int jpm = (tj + tm) / 2, jmm = (tj - tm) / 2;

  Rational pre(cpp_int(tj + 1) * factorial(a) * factorial(b) * factorial(c), factorial(s));
  pre *= Rational(factorial(j1pm) * factorial(j1mm) * factorial(j2pm) * factorial(j2mm) * factorial(jpm) *
                  factorial(jmm));

  // t runs over all values keeping every factorial argument non-negative.
  const int d1 = (tj - tj2 + tm1) / 2;   // j - j2 + m1
  const int d2 = (tj - tj1 - tm2) / 2;   // j - j1 - m2
  const int t_min = std::max({0, -d1, -d2});
  const int t_max = std::min({a, j1mm, j2pm});
  Rational sum = 0;
  for (int t = t_min; t <= t_max; ++t) {
    const cpp_int den = factorial(t) * factorial(a - t) * factorial(j1mm - t) * factorial(j2pm - t) *
                        factorial(d1 + t) * factorial(d2 + t);
    sum += Rational((t % 2 == 0) ? 1 : -1, den);
  }
  if (sum == 0) return CgValue::zero();
  return {sum > 0 ? 1 : -1, sum * sum * pre};
}

}  // namespace

bool triangle(HalfInt j1, HalfInt j2, HalfInt j) {
  const int t1 = j1.twice(), t2 = j2.twice(), t = j.twice();
  if ((t1 + t2 + t) % 2 != 0) return false;
  return t >= std::abs(t1 - t2) && t <= t1 + t2;
}

CgValue cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m, PhaseConvention conv) {
  check_pair(j1, m1);
  check_pair(j2, m2);
  check_pair(j, m);
  if (m1 + m2 != m || !triangle(j1, j2, j)) return CgValue::zero();

  static std::shared_mutex mu;
  static std::unordered_map<Key, CgValue, KeyHash> memo;
  const Key key{{j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice()}, static_cast<int>(conv)};
  {
    std::shared_lock lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  CgValue value = racah(j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice());
  if (conv == PhaseConvention::reversed && ((j1.twice() + j2.twice() - j.twice()) / 2) % 2 != 0) {
    value = -value;
  }
  std::unique_lock lock(mu);
  memo.emplace(key, value);
  return value;
}

double cg_double(int tj1, int tm1, int tj2, int tm2, int tj, int tm, PhaseConvention conv) {
  if (tm1 + tm2 != tm) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
  static std::shared_mutex mu;
  static std::unordered_map<Key, double, KeyHash> memo;
  const Key key{{tj1, tm1, tj2, tm2, tj, tm}, static_cast<int>(conv)};
  {
    std::shared_lock lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const double v = cg(HalfInt::from_twice(tj1), HalfInt::from_twice(tm1), HalfInt::from_twice(tj2),
                      HalfInt::from_twice(tm2), HalfInt::from_twice(tj), HalfInt::from_twice(tm), conv)
                       .to_double();
  std::unique_lock lock(mu);
  memo.emplace(key, v);
  return v;
}

CgValue cg_spin4(const IrrepLabel& J1, const Magnetic& x1, const IrrepLabel& J2, const Magnetic& x2,
                 const IrrepLabel& J, const Magnetic& x, PhaseConvention conv) {
  if (J1.n() != 4 || J2.n() != 4 || J.n() != 4) throw InvalidLabelError("cg_spin4 needs n=4 labels");
  if (x1.count() != 2 || x2.count() != 2 || x.count() != 2) {
    throw InvalidLabelError("cg_spin4 needs magnetic pairs");
  }
  CgValue out = CgValue::one();
  for (int f = 0; f < 2; ++f) {
    out = out * cg(J1.part(f), x1.part(f), J2.part(f), x2.part(f), J.part(f), x.part(f), conv);
  }
  return out;
}

double cg_product(const IrrepLabel& J1, const Magnetic& x1, const IrrepLabel& J2, const Magnetic& x2,
                  const IrrepLabel& J, const Magnetic& x, PhaseConvention conv) {
  if (J1.n() != J2.n() || J1.n() != J.n()) throw InvalidLabelError("mixed-rank labels in coupling");
  double out = 1.0;
  for (int f = 0; f < J.factor_count(); ++f) {
    out *= cg_double(J1.part(f).twice(), x1.part(f).twice(), J2.part(f).twice(), x2.part(f).twice(),
                     J.part(f).twice(), x.part(f).twice(), conv);
    if (out == 0.0) return 0.0;
  }
  return out;
}

}  // namespace gmrk::coupling
