#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "giry/rational.hpp"

namespace giry {

/// A finite measurable space: a label plus an ordered list of distinct point
/// labels.  Every subset of a finite space is measurable, so no sigma-algebra
/// object exists; events are plain point subsets (see Event).
///
/// Spaces compare structurally (label and point list), so independently built
/// copies of the same space are interchangeable.
class Space {
 public:
  Space(std::string label, std::vector<std::string> points);

  const std::string& label() const { return label_; }
  Index size() const { return static_cast<Index>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }

  const std::string& point(Index i) const;
  Index index_of(std::string_view point_label) const;  // throws UnknownPoint
  bool has_point(std::string_view point_label) const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.label_ == b.label_ && a.points_ == b.points_;
  }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

 private:
  std::string label_;
  std::vector<std::string> points_;
  std::unordered_map<std::string, Index> index_;
};

/// The terminal object: the one-point space.
Space terminal_space();

/// The product X x Y realized as a Space whose points are the pairs "(x,y)"
/// in row-major order (left index varies slowest).  On finite sets the tensor
/// and product sigma-algebras coincide (both are the full powerset), so one
/// type serves for both readings of the product.
class ProductSpace {
 public:
  ProductSpace(Space left, Space right);

  const Space& left() const { return left_; }
  const Space& right() const { return right_; }
  const Space& space() const { return flat_; }

  Index pair_index(Index left_i, Index right_j) const;
  Index left_of(Index pair) const;
  Index right_of(Index pair) const;

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  Space left_;
  Space right_;
  Space flat_;
};

/// A measurable set: a subset of the points of one Space, kept sorted.
class Event {
 public:
  Event(Space space, std::vector<Index> members);

  static Event none(Space space);
  static Event full(Space space);
  static Event of_labels(const Space& space, const std::vector<std::string>& labels);

  const Space& space() const { return space_; }
  const std::vector<Index>& members() const { return members_; }
  Index count() const { return static_cast<Index>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(Index i) const;

  Event complement() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.space_ == b.space_ && a.members_ == b.members_;
  }
  friend bool operator!=(const Event& a, const Event& b) { return !(a == b); }

 private:
  Space space_;
  std::vector<Index> members_;
};

Event intersect(const Event& a, const Event& b);
bool subset_of(const Event& a, const Event& b);
bool disjoint(const Event& a, const Event& b);

}  // namespace giry
