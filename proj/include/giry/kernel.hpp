#pragma once

#include <ostream>
#include <vector>

#include "giry/dist.hpp"
#include "giry/map.hpp"

namespace giry {

/// A Markov kernel X -> G(Y): one distribution on the target per source
/// point, stored densely as a row-stochastic matrix.  These are the arrows of
/// the Kleisli category; kleisli_compose is their composition.
class Kernel {
 public:
  Kernel(Space source, Space target, RatMat rows);

  static Kernel from_rows(Space source, std::vector<Dist> rows);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const RatMat& rows() const { return rows_; }

  Dist row(Index source_point) const;
  Dist row(std::string_view source_label) const;

  friend bool operator==(const Kernel& a, const Kernel& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Kernel& a, const Kernel& b) { return !(a == b); }

 private:
  Space source_;
  Space target_;
  RatMat rows_;
};

std::ostream& operator<<(std::ostream& os, const Kernel& k);

/// The deterministic kernel of a map: row(x) = dirac(f(x)).  Each row takes
/// only the values 0 and 1 on events.
Kernel det_kernel(const Map& f);

/// A finitely supported element of G(G(X)): an outer distribution whose
/// points index inner distributions on a common space.  G(X) itself is never
/// materialized; only these finite supports ever arise.
class MetaDist {
 public:
  MetaDist(Dist outer, std::vector<Dist> inner);

  const Dist& outer() const { return outer_; }
  const std::vector<Dist>& inners() const { return inner_; }
  const Dist& inner(Index i) const;
  const Space& inner_space() const { return inner_.front().space(); }

 private:
  Dist outer_;
  std::vector<Dist> inner_;
};

/// Monad multiplication: averages the inner distributions by the outer
/// weights.  weight(p) = sum_i outer(i) * inner_i(p).
Dist mu(const MetaDist& m);

/// Kleisli composition (after ? before): row(x)(z) = sum_y before(x)(y) * after(y)(z).
Kernel kleisli_compose(const Kernel& after, const Kernel& before);

/// A kernel applied to a distribution, treating the distribution as an arrow
/// from the terminal object: weight(y) = sum_x p(x) * k(x)(y).
Dist kernel_apply(const Kernel& k, const Dist& p);

}  // namespace giry
