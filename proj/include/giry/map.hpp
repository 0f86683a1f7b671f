#pragma once

#include <vector>

#include "giry/space.hpp"

namespace giry {

/// A measurable function between finite spaces (every function is measurable
/// here): one target point per source point.
class Map {
 public:
  Map(Space source, Space target, std::vector<Index> assignment);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::vector<Index>& assignment() const { return assignment_; }

  Index operator()(Index source_point) const;

  friend bool operator==(const Map& a, const Map& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.assignment_ == b.assignment_;
  }

 private:
  Space source_;
  Space target_;
  std::vector<Index> assignment_;
};

Map identity_map(const Space& x);
Map constant_map(const Space& x, const Space& y, Index y_point);
Map compose(const Map& outer, const Map& inner);  // outer after inner

/// f x g : X*Y -> X'*Y', pairwise application.
Map product_map(const Map& f, const Map& g);

Map proj_left(const ProductSpace& xy);
Map proj_right(const ProductSpace& xy);

/// Graph of f: X -> X*Y, x |-> (x, f(x)).  Always injective.
Map graph_map(const Map& f);

/// Constant graph map at a point x of X: Y -> X*Y, y |-> (x,y).
Map graph_point(const Space& x_space, const Space& y_space, Index x);

/// The symmetric constant graph map at a point y of Y: X -> X*Y, x |-> (x,y).
Map graph_point_right(const Space& x_space, const Space& y_space, Index y);

Event preimage(const Map& f, const Event& b);

}  // namespace giry
