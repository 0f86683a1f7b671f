#include "giry/strength.hpp"

#include <sstream>

#include "giry/errors.hpp"

namespace giry {

Dist tau_rr(const Space& x_space, Index x, const Dist& q) {
  return pushforward(graph_point(x_space, q.space(), x), q);
}

Dist tau_rl(const Dist& p, const Space& y_space, Index y) {
  return pushforward(graph_point_right(p.space(), y_space, y), p);
}

std::function<Dist(const Dist&)> st(const Map& f) {
  return [f](const Dist& p) {
    if (p.space() != f.source())
      throw SpaceMismatch("st: distribution on '" + p.space().label() + "', map from '" +
                          f.source().label() + "'");
    // One-point slice of the function space holding just f; the strength at
    // (f, p) lands on that slice, and evaluation (g,x) |-> g(x) brings it home.
    const Space slice("[" + f.source().label() + "->" + f.target().label() + "]", {"f"});
    const Dist paired = tau_rr(slice, 0, p);
    const ProductSpace dom(slice, p.space());
    std::vector<Index> ev(static_cast<std::size_t>(dom.space().size()));
    for (Index i = 0; i < dom.space().size(); ++i) ev[static_cast<std::size_t>(i)] = f(dom.right_of(i));
    const Dist via_strength = pushforward(Map(dom.space(), f.target(), std::move(ev)), paired);

    const Dist direct = pushforward(f, p);
    if (via_strength.weights() != direct.weights())
      throw InvariantViolation("st: strength composite disagrees with direct pushforward");
    return direct;
  };
}

Dist joint_from_kernel(const Dist& prior, const Kernel& k) {
  if (prior.space() != k.source())
    throw SpaceMismatch("joint_from_kernel: prior on '" + prior.space().label() +
                        "', kernel from '" + k.source().label() + "'");
  std::vector<Dist> slices;
  slices.reserve(static_cast<std::size_t>(prior.space().size()));
  for (Index x = 0; x < prior.space().size(); ++x)
    slices.push_back(tau_rr(prior.space(), x, k.row(x)));
  return mu(MetaDist(prior, std::move(slices)));
}

bool check_tau_naturality(const Map& f, const Map& g, std::span<const TauSample> samples,
                          std::string* counterexample) {
  const Map f_x_1 = product_map(f, identity_map(g.source()));
  const Map one_x_g = product_map(identity_map(f.source()), g);
  for (const TauSample& s : samples) {
    const Dist base = tau_rr(f.source(), s.x, s.q);

    const Dist first_lhs = pushforward(f_x_1, base);
    const Dist first_rhs = tau_rr(f.target(), f(s.x), s.q);
    const Dist second_lhs = pushforward(one_x_g, base);
    const Dist second_rhs = tau_rr(f.source(), s.x, pushforward(g, s.q));

    if (first_lhs != first_rhs || second_lhs != second_rhs) {
      if (counterexample) {
        std::ostringstream os;
        os << "naturality fails at x = " << f.source().point(s.x) << ", Q = " << s.q;
        if (first_lhs != first_rhs)
          os << "; first square: " << first_lhs << " vs " << first_rhs;
        else
          os << "; second square: " << second_lhs << " vs " << second_rhs;
        *counterexample = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace giry
