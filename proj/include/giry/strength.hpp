#pragma once

#include <functional>
#include <span>
#include <string>

#include "giry/kernel.hpp"

namespace giry {

/// Tensor strength with the point on the left: (x, Q) |-> Q Gamma_x^{-1},
/// the image of Q under the constant graph map at x.  The result sits on
/// X*Y with pi_X-marginal dirac(x) and pi_Y-marginal Q.
Dist tau_rr(const Space& x_space, Index x, const Dist& q);

/// The symmetric component, point on the right: (P, y) |-> P Gamma_y^{-1}.
/// Equals tensor(P, dirac(y)).
Dist tau_rl(const Dist& p, const Space& y_space, Index y);

/// The functor action G(f) built from the strength rather than directly:
/// pair the map with the input measure on a one-point slice of the function
/// space, apply tau_rr there, and push along evaluation.  The result is
/// checked against the direct pushforward before being returned.
std::function<Dist(const Dist&)> st(const Map& f);

/// Joint measure of a prior and a kernel via the monadic composite: push the
/// prior through x |-> tau_rr(x, k(x)) and flatten with mu.
/// weight(x,y) = prior(x) * k(x)(y).
Dist joint_from_kernel(const Dist& prior, const Kernel& k);

struct TauSample {
  Index x;
  Dist q;
};

/// Checks both naturality squares of the strength on the given samples:
///   G(f x 1)(tau_rr(x, Q)) == tau_rr(f(x), Q)
///   G(1 x g)(tau_rr(x, Q)) == tau_rr(x, G(g)(Q))
/// Exact equalities; a failing sample is described in *counterexample.
bool check_tau_naturality(const Map& f, const Map& g, std::span<const TauSample> samples,
                          std::string* counterexample = nullptr);

}  // namespace giry
