#include "giry/space.hpp"

#include <algorithm>

#include "giry/errors.hpp"

namespace giry {

Space::Space(std::string label, std::vector<std::string> points)
    : label_(std::move(label)), points_(std::move(points)) {
  if (points_.empty())
    throw InvalidValue("space '" + label_ + "' has no points");
  index_.reserve(points_.size());
  for (Index i = 0; i < static_cast<Index>(points_.size()); ++i) {
    if (!index_.emplace(points_[i], i).second)
      throw InvalidValue("space '" + label_ + "' repeats point '" + points_[i] + "'");
  }
}

const std::string& Space::point(Index i) const {
  if (i < 0 || i >= size())
    throw UnknownPoint("space '" + label_ + "' has no point #" + std::to_string(i));
  return points_[static_cast<std::size_t>(i)];
}

Index Space::index_of(std::string_view point_label) const {
  auto it = index_.find(std::string(point_label));
  if (it == index_.end())
    throw UnknownPoint("space '" + label_ + "' has no point '" + std::string(point_label) + "'");
  return it->second;
}

bool Space::has_point(std::string_view point_label) const {
  return index_.contains(std::string(point_label));
}

Space terminal_space() { return Space("1", {"*"}); }

namespace {

Space flatten(const Space& left, const Space& right) {
  std::vector<std::string> pairs;
  pairs.reserve(static_cast<std::size_t>(left.size() * right.size()));
  for (const auto& l : left.points())
    for (const auto& r : right.points()) pairs.push_back("(" + l + "," + r + ")");
  return Space(left.label() + "*" + right.label(), std::move(pairs));
}

}  // namespace

ProductSpace::ProductSpace(Space left, Space right)
    : left_(std::move(left)), right_(std::move(right)), flat_(flatten(left_, right_)) {}

Index ProductSpace::pair_index(Index left_i, Index right_j) const {
  if (left_i < 0 || left_i >= left_.size())
    throw UnknownPoint("no left point #" + std::to_string(left_i) + " in " + left_.label());
  if (right_j < 0 || right_j >= right_.size())
    throw UnknownPoint("no right point #" + std::to_string(right_j) + " in " + right_.label());
  return left_i * right_.size() + right_j;
}

Index ProductSpace::left_of(Index pair) const {
  if (pair < 0 || pair >= flat_.size())
    throw UnknownPoint("no pair #" + std::to_string(pair) + " in " + flat_.label());
  return pair / right_.size();
}

Index ProductSpace::right_of(Index pair) const {
  if (pair < 0 || pair >= flat_.size())
    throw UnknownPoint("no pair #" + std::to_string(pair) + " in " + flat_.label());
  return pair % right_.size();
}

Event::Event(Space space, std::vector<Index> members)
    : space_(std::move(space)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index i : members_) {
    if (i < 0 || i >= space_.size())
      throw UnknownPoint("event member #" + std::to_string(i) + " outside space '" +
                         space_.label() + "'");
  }
}

Event Event::none(Space space) { return Event(std::move(space), {}); }

Event Event::full(Space space) {
  std::vector<Index> all(static_cast<std::size_t>(space.size()));
  for (Index i = 0; i < space.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return Event(std::move(space), std::move(all));
}

Event Event::of_labels(const Space& space, const std::vector<std::string>& labels) {
  std::vector<Index> members;
  members.reserve(labels.size());
  for (const auto& l : labels) members.push_back(space.index_of(l));
  return Event(space, std::move(members));
}

bool Event::contains(Index i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Event Event::complement() const {
  std::vector<Index> rest;
  rest.reserve(static_cast<std::size_t>(space_.size() - count()));
  for (Index i = 0; i < space_.size(); ++i)
    if (!contains(i)) rest.push_back(i);
  return Event(space_, std::move(rest));
}

Event intersect(const Event& a, const Event& b) {
  if (a.space() != b.space())
    throw SpaceMismatch("intersect: events on '" + a.space().label() + "' vs '" +
                        b.space().label() + "'");
  std::vector<Index> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return Event(a.space(), std::move(common));
}

bool subset_of(const Event& a, const Event& b) {
  if (a.space() != b.space())
    throw SpaceMismatch("subset_of: events on '" + a.space().label() + "' vs '" +
                        b.space().label() + "'");
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                       a.members().end());
}

bool disjoint(const Event& a, const Event& b) { return intersect(a, b).empty(); }

}  // namespace giry
