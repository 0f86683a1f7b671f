#pragma once

#include <optional>
#include <ostream>

#include "giry/map.hpp"
#include "giry/rational.hpp"
#include "giry/space.hpp"

namespace giry {

/// An exact-rational probability measure on a finite Space: one weight per
/// point, all non-negative, summing to exactly 1.  Immutable once built.
class Dist {
 public:
  Dist(Space space, RatVec weights);

  static Dist uniform(Space space);

  const Space& space() const { return space_; }
  const RatVec& weights() const { return weights_; }

  const Rat& weight(Index point) const;
  const Rat& weight(std::string_view point_label) const;

  friend bool operator==(const Dist& a, const Dist& b) {
    return a.space_ == b.space_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }

 private:
  Space space_;
  RatVec weights_;
};

std::ostream& operator<<(std::ostream& os, const Dist& p);

/// A non-negative pointwise function on a Space, not required to sum to 1.
/// The value rn_derivative returns.
class Density {
 public:
  Density(Space space, RatVec values);

  const Space& space() const { return space_; }
  const RatVec& values() const { return values_; }
  const Rat& value(Index point) const;

  friend bool operator==(const Density& a, const Density& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  Space space_;
  RatVec values_;
};

/// Result of lebesgue_decompose: mu = alpha * ac_part + (1-alpha) * singular_part
/// with ac_part << nu and singular_part _|_ nu.  A degenerate split (alpha 0
/// or 1) omits the part the theorem does not determine.
struct Decomposition {
  Rat alpha;
  std::optional<Dist> ac_part;
  std::optional<Dist> singular_part;
};

/// Monad unit: the point mass at x.
Dist dirac(const Space& space, Index x);
Dist dirac(const Space& space, std::string_view point_label);

/// Measure of an event: the finite sum of member weights.
Rat mass(const Dist& p, const Event& a);

/// The set of points with strictly positive weight.
Event support(const Dist& p);

/// Product measure on X*Y: weight(x,y) = p(x) * q(y).
Dist tensor(const Dist& p, const Dist& q);

/// Image measure P f^{-1}; weight(y) is the mass of the fiber over y.
Dist pushforward(const Map& f, const Dist& p);

/// mu << nu: every nu-null set is mu-null, i.e. supp(mu) within supp(nu).
bool absolutely_continuous(const Dist& mu, const Dist& nu);

/// mu _|_ nu: the supports are disjoint.
bool mutually_singular(const Dist& mu, const Dist& nu);

/// The density h with mu(A) = sum_{p in A} h(p) nu(p) for every event A.
/// Canonical representative: h = mu/nu on supp(nu) and 0 elsewhere.
/// Throws NotAbsolutelyContinuous when no density exists.
Density rn_derivative(const Dist& mu, const Dist& nu);

/// sum_{p in A} h(p) nu(p); the h-weighted mass of A under nu.
Rat mass_with_density(const Density& h, const Dist& nu, const Event& a);

/// Unique split of mu into a part absolutely continuous w.r.t. nu and a part
/// singular to it: restrict mu to supp(nu) and to its complement, then
/// renormalize each piece.
Decomposition lebesgue_decompose(const Dist& mu, const Dist& nu);

}  // namespace giry
