#include "giry/map.hpp"

#include <string>

#include "giry/errors.hpp"

namespace giry {

Map::Map(Space source, Space target, std::vector<Index> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<Index>(assignment_.size()) != source_.size())
    throw InvalidValue("map " + source_.label() + "->" + target_.label() +
                       ": assignment size " + std::to_string(assignment_.size()) +
                       " != " + std::to_string(source_.size()) + " source points");
  for (Index image : assignment_) {
    if (image < 0 || image >= target_.size())
      throw UnknownPoint("map " + source_.label() + "->" + target_.label() +
                         ": image #" + std::to_string(image) + " outside target");
  }
}

Index Map::operator()(Index source_point) const {
  if (source_point < 0 || source_point >= source_.size())
    throw UnknownPoint("map " + source_.label() + "->" + target_.label() + ": no point #" +
                       std::to_string(source_point));
  return assignment_[static_cast<std::size_t>(source_point)];
}

Map identity_map(const Space& x) {
  std::vector<Index> id(static_cast<std::size_t>(x.size()));
  for (Index i = 0; i < x.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  return Map(x, x, std::move(id));
}

Map constant_map(const Space& x, const Space& y, Index y_point) {
  if (y_point < 0 || y_point >= y.size())
    throw UnknownPoint("constant_map: no point #" + std::to_string(y_point) + " in '" +
                       y.label() + "'");
  return Map(x, y, std::vector<Index>(static_cast<std::size_t>(x.size()), y_point));
}

Map compose(const Map& outer, const Map& inner) {
  if (inner.target() != outer.source())
    throw SpaceMismatch("compose: inner target '" + inner.target().label() +
                        "' != outer source '" + outer.source().label() + "'");
  std::vector<Index> chain(static_cast<std::size_t>(inner.source().size()));
  for (Index i = 0; i < inner.source().size(); ++i)
    chain[static_cast<std::size_t>(i)] = outer(inner(i));
  return Map(inner.source(), outer.target(), std::move(chain));
}

Map product_map(const Map& f, const Map& g) {
  const ProductSpace dom(f.source(), g.source());
  const ProductSpace cod(f.target(), g.target());
  std::vector<Index> assignment(static_cast<std::size_t>(dom.space().size()));
  for (Index p = 0; p < dom.space().size(); ++p)
    assignment[static_cast<std::size_t>(p)] = cod.pair_index(f(dom.left_of(p)), g(dom.right_of(p)));
  return Map(dom.space(), cod.space(), std::move(assignment));
}

Map proj_left(const ProductSpace& xy) {
  std::vector<Index> assignment(static_cast<std::size_t>(xy.space().size()));
  for (Index p = 0; p < xy.space().size(); ++p)
    assignment[static_cast<std::size_t>(p)] = xy.left_of(p);
  return Map(xy.space(), xy.left(), std::move(assignment));
}

Map proj_right(const ProductSpace& xy) {
  std::vector<Index> assignment(static_cast<std::size_t>(xy.space().size()));
  for (Index p = 0; p < xy.space().size(); ++p)
    assignment[static_cast<std::size_t>(p)] = xy.right_of(p);
  return Map(xy.space(), xy.right(), std::move(assignment));
}

Map graph_map(const Map& f) {
  const ProductSpace xy(f.source(), f.target());
  std::vector<Index> assignment(static_cast<std::size_t>(f.source().size()));
  for (Index x = 0; x < f.source().size(); ++x)
    assignment[static_cast<std::size_t>(x)] = xy.pair_index(x, f(x));
  return Map(f.source(), xy.space(), std::move(assignment));
}

Map graph_point(const Space& x_space, const Space& y_space, Index x) {
  const ProductSpace xy(x_space, y_space);
  std::vector<Index> assignment(static_cast<std::size_t>(y_space.size()));
  for (Index y = 0; y < y_space.size(); ++y)
    assignment[static_cast<std::size_t>(y)] = xy.pair_index(x, y);
  return Map(y_space, xy.space(), std::move(assignment));
}

Map graph_point_right(const Space& x_space, const Space& y_space, Index y) {
  const ProductSpace xy(x_space, y_space);
  std::vector<Index> assignment(static_cast<std::size_t>(x_space.size()));
  for (Index x = 0; x < x_space.size(); ++x)
    assignment[static_cast<std::size_t>(x)] = xy.pair_index(x, y);
  return Map(x_space, xy.space(), std::move(assignment));
}

Event preimage(const Map& f, const Event& b) {
  if (b.space() != f.target())
    throw SpaceMismatch("preimage: event on '" + b.space().label() + "', map into '" +
                        f.target().label() + "'");
  std::vector<Index> members;
  for (Index x = 0; x < f.source().size(); ++x)
    if (b.contains(f(x))) members.push_back(x);
  return Event(f.source(), std::move(members));
}

}  // namespace giry
