#include "lorenz/torus_detect.hpp"

#include "lorenz/garside.hpp"

namespace lorenz {

std::string to_string(const TorusVerdict& v) {
  switch (v.kind) {
    case TorusVerdict::Kind::Torus:
      return "Torus(" + std::to_string(v.t) + "," + std::to_string(v.q) + ")";
    case TorusVerdict::Kind::NotTorus:
      return "NotTorus";
    case TorusVerdict::Kind::Unknot:
      return "Unknot";
  }
  return "NotTorus";
}

TorusVerdict is_torus(const LorenzVector& v) {
  const auto normalized = normalize(v);
  if (normalized.is_unknot()) return TorusVerdict::unknot();
  const BraidWord m = minimal_braid_word(*normalized.vector);
  const int t = m.strands();
  const auto length = static_cast<long long>(m.length());
  if (length % (t - 1) != 0) return TorusVerdict::not_torus();
  const long long q = length / (t - 1);
  if (q < t) return TorusVerdict::not_torus();

  // M^t is built factor by factor; delta^{tq} = Delta^{2q} has the normal
  // form of 2q half twists.
  const NormalForm m_power = power(normal_form(m), t);
  const auto factors = m_power.factors();
  if (static_cast<long long>(factors.size()) != 2 * q) return TorusVerdict::not_torus();
  for (const auto& f : factors) {
    if (!f.is_delta()) return TorusVerdict::not_torus();
  }
  return TorusVerdict::torus(t, static_cast<int>(q));
}

}  // namespace lorenz
