#include "giry/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <utility>

#include "giry/errors.hpp"

namespace giry {

Index Rng::pick(Index bound) {
  if (bound <= 0) throw InvalidValue("pick from an empty range");
  return static_cast<Index>(engine_() % static_cast<std::uint64_t>(bound));
}

Space random_space(Rng& rng, const std::string& label, Index max_points) {
  if (max_points < 1) throw InvalidValue("random_space needs max_points >= 1");
  Index n = 1 + rng.pick(max_points);
  std::string stem = label;
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::vector<std::string> points;
  points.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) points.push_back(stem + std::to_string(i + 1));
  return Space(label, std::move(points));
}

Dist random_dist(Rng& rng, const Space& space, Index max_denominator) {
  return random_dist_within(rng, Event::full(space), max_denominator);
}

Dist random_dist_within(Rng& rng, const Event& carrier, Index max_denominator) {
  if (carrier.empty()) throw InvalidValue("random_dist_within over an empty event");
  if (max_denominator < 1) throw InvalidValue("random_dist_within needs max_denominator >= 1");
  Index d = 1 + rng.pick(max_denominator);
  RatVec weights = RatVec::Zero(carrier.space().size());
  Rat unit(BigInt(1), BigInt(d));
  for (Index ball = 0; ball < d; ++ball) {
    Index slot = carrier.members()[static_cast<std::size_t>(rng.pick(carrier.count()))];
    weights(slot) += unit;
  }
  return Dist(carrier.space(), std::move(weights));
}

Map random_map(Rng& rng, const Space& source, const Space& target) {
  std::vector<Index> assignment;
  assignment.reserve(static_cast<std::size_t>(source.size()));
  for (Index i = 0; i < source.size(); ++i) assignment.push_back(rng.pick(target.size()));
  return Map(source, target, std::move(assignment));
}

Kernel random_kernel(Rng& rng, const Space& source, const Space& target, Index max_denominator) {
  std::vector<Dist> rows;
  rows.reserve(static_cast<std::size_t>(source.size()));
  for (Index i = 0; i < source.size(); ++i) rows.push_back(random_dist(rng, target, max_denominator));
  return Kernel::from_rows(source, std::move(rows));
}

BayesModel random_model(Rng& rng, Index max_points, Index max_denominator) {
  Space x = random_space(rng, "X", max_points);
  Space y = random_space(rng, "Y", max_points);
  Dist prior = random_dist(rng, x, max_denominator);
  Kernel likelihood = random_kernel(rng, x, y, max_denominator);
  return BayesModel(std::move(prior), std::move(likelihood));
}

namespace {

void compositions(Index remaining, Index slot, Index slots, BigInt denominator,
                  std::vector<Rat>& current, std::set<std::vector<Rat>>& out) {
  if (slot == slots - 1) {
    current[static_cast<std::size_t>(slot)] = Rat(BigInt(remaining), denominator);
    out.insert(current);
    return;
  }
  for (Index take = 0; take <= remaining; ++take) {
    current[static_cast<std::size_t>(slot)] = Rat(BigInt(take), denominator);
    compositions(remaining - take, slot + 1, slots, denominator, current, out);
  }
}

}  // namespace

std::vector<Dist> enumerate_dists(const Space& space, Index max_denominator) {
  if (max_denominator < 1) throw InvalidValue("enumerate_dists needs max_denominator >= 1");
  std::set<std::vector<Rat>> seen;
  std::vector<Rat> scratch(static_cast<std::size_t>(space.size()));
  for (Index d = 1; d <= max_denominator; ++d) {
    compositions(d, 0, space.size(), BigInt(d), scratch, seen);
  }
  std::vector<Dist> result;
  result.reserve(seen.size());
  for (const auto& weights : seen) {
    RatVec v(space.size());
    for (Index i = 0; i < space.size(); ++i) v(i) = weights[static_cast<std::size_t>(i)];
    result.emplace_back(space, std::move(v));
  }
  return result;
}

}  // namespace giry
