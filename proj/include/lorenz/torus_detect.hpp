#pragma once

#include <string>

#include "lorenz/lorenz_vector.hpp"

namespace lorenz {

struct TorusVerdict {
  enum class Kind { Torus, NotTorus, Unknot };
  Kind kind = Kind::NotTorus;
  int t = 0;  // Torus only: link type T(t, q), with q >= t >= 2
  int q = 0;

  static TorusVerdict torus(int t, int q) { return {Kind::Torus, t, q}; }
  static TorusVerdict not_torus() { return {Kind::NotTorus, 0, 0}; }
  static TorusVerdict unknot() { return {Kind::Unknot, 0, 0}; }

  bool operator==(const TorusVerdict&) const = default;
};

/// "Torus(3,14)", "NotTorus" or "Unknot".
std::string to_string(const TorusVerdict& v);

/// Decides whether the closure is a torus link. With M the minimal braid
/// index word on t strands, the link is T(t, q) exactly when |M| = q(t-1),
/// q >= t, and M^t equals delta^{tq} = Delta^{2q} in the braid group.
TorusVerdict is_torus(const LorenzVector& v);

}  // namespace lorenz
