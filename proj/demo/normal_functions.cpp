// Normal functions on the V-shaped poset, then the ideal space of Q^2 and
// the function gamma(a) for a = (1, 2).

#include <iostream>
#include <memory>

#include "canext/bal/context.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/normal_fn.hpp"

using namespace canext;

int main() {
  auto v = std::make_shared<const order::FinPoset>(
      order::FinPoset::from_edges({"bot", "I1", "I2"}, {{0, 1}, {0, 2}}));
  const normal::PosetFn f(v, {0, 2, 1});
  const auto env = normal::envelopes(f);
  std::cout << "f   = " << f.to_string() << "\n"
            << "f^* = " << env.upper.to_string() << "\n"
            << "f_* = " << env.lower.to_string() << "\n"
            << "f^# = " << env.sharp.to_string() << "\n"
            << "idempotents of N(V): " << normal::normal_idempotents(*v).size() << "\n\n";

  bal::CanExtContext ctx(2);
  normal::IdealSpace x(ctx);
  const lalg::LVec a{1, 2};
  const auto g = x.gamma(a);
  std::cout << "gamma" << lalg::to_string(a) << ":\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    std::cout << "  " << x.poset().label(i) << " -> " << canext::to_string(g.fn().values()[i]) << "\n";
  std::cout << "psi(gamma(a)) = " << lalg::to_string(x.psi(g)) << "\n";
}
