#include "giry/dist.hpp"

#include <string>

#include "giry/errors.hpp"

namespace giry {

namespace {

void require_same_space(const Dist& a, const Dist& b, const char* op) {
  if (a.space() != b.space())
    throw SpaceMismatch(std::string(op) + ": distributions on '" + a.space().label() +
                        "' vs '" + b.space().label() + "'");
}

}  // namespace

Dist::Dist(Space space, RatVec weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size())
    throw InvalidValue("distribution on '" + space_.label() + "': " +
                       std::to_string(weights_.size()) + " weights for " +
                       std::to_string(space_.size()) + " points");
  Rat total;
  for (Index i = 0; i < weights_.size(); ++i) {
    if (weights_[i].is_negative())
      throw InvalidValue("distribution on '" + space_.label() + "': negative weight at '" +
                         space_.point(i) + "'");
    total += weights_[i];
  }
  if (total != Rat(1))
    throw InvalidValue("distribution on '" + space_.label() + "': weights sum to " +
                       to_string(total) + ", expected 1");
}

Dist Dist::uniform(Space space) {
  const Index n = space.size();
  RatVec w = RatVec::Constant(n, Rat(1, n));
  return Dist(std::move(space), std::move(w));
}

const Rat& Dist::weight(Index point) const {
  if (point < 0 || point >= space_.size())
    throw UnknownPoint("distribution on '" + space_.label() + "': no point #" +
                       std::to_string(point));
  return weights_[point];
}

const Rat& Dist::weight(std::string_view point_label) const {
  return weights_[space_.index_of(point_label)];
}

std::ostream& operator<<(std::ostream& os, const Dist& p) {
  os << p.space().label() << "{";
  for (Index i = 0; i < p.space().size(); ++i) {
    if (i) os << ", ";
    os << p.space().point(i) << ": " << p.weights()[i];
  }
  return os << "}";
}

Density::Density(Space space, RatVec values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw InvalidValue("density on '" + space_.label() + "': " +
                       std::to_string(values_.size()) + " values for " +
                       std::to_string(space_.size()) + " points");
  for (Index i = 0; i < values_.size(); ++i)
    if (values_[i].is_negative())
      throw InvalidValue("density on '" + space_.label() + "': negative value at '" +
                         space_.point(i) + "'");
}

const Rat& Density::value(Index point) const {
  if (point < 0 || point >= space_.size())
    throw UnknownPoint("density on '" + space_.label() + "': no point #" +
                       std::to_string(point));
  return values_[point];
}

Dist dirac(const Space& space, Index x) {
  if (x < 0 || x >= space.size())
    throw UnknownPoint("dirac: no point #" + std::to_string(x) + " in '" + space.label() + "'");
  RatVec w = RatVec::Zero(space.size());
  w[x] = Rat(1);
  return Dist(space, std::move(w));
}

Dist dirac(const Space& space, std::string_view point_label) {
  return dirac(space, space.index_of(point_label));
}

Rat mass(const Dist& p, const Event& a) {
  if (a.space() != p.space())
    throw SpaceMismatch("mass: event on '" + a.space().label() + "', distribution on '" +
                        p.space().label() + "'");
  Rat total;
  for (Index i : a.members()) total += p.weights()[i];
  return total;
}

Event support(const Dist& p) {
  std::vector<Index> members;
  for (Index i = 0; i < p.weights().size(); ++i)
    if (!p.weights()[i].is_zero()) members.push_back(i);
  return Event(p.space(), std::move(members));
}

Dist tensor(const Dist& p, const Dist& q) {
  const ProductSpace xy(p.space(), q.space());
  RatVec w(xy.space().size());
  for (Index i = 0; i < p.weights().size(); ++i)
    for (Index j = 0; j < q.weights().size(); ++j)
      w[xy.pair_index(i, j)] = p.weights()[i] * q.weights()[j];
  return Dist(xy.space(), std::move(w));
}

Dist pushforward(const Map& f, const Dist& p) {
  if (p.space() != f.source())
    throw SpaceMismatch("pushforward: distribution on '" + p.space().label() +
                        "', map from '" + f.source().label() + "'");
  RatVec w = RatVec::Zero(f.target().size());
  for (Index x = 0; x < p.weights().size(); ++x) w[f(x)] += p.weights()[x];
  return Dist(f.target(), std::move(w));
}

bool absolutely_continuous(const Dist& mu, const Dist& nu) {
  require_same_space(mu, nu, "absolutely_continuous");
  return subset_of(support(mu), support(nu));
}

bool mutually_singular(const Dist& mu, const Dist& nu) {
  require_same_space(mu, nu, "mutually_singular");
  return disjoint(support(mu), support(nu));
}

Density rn_derivative(const Dist& mu, const Dist& nu) {
  require_same_space(mu, nu, "rn_derivative");
  if (!absolutely_continuous(mu, nu))
    throw NotAbsolutelyContinuous("rn_derivative: mu is not absolutely continuous w.r.t. nu");
  RatVec h = RatVec::Zero(mu.space().size());
  for (Index i = 0; i < h.size(); ++i)
    if (!nu.weights()[i].is_zero()) h[i] = mu.weights()[i] / nu.weights()[i];
  return Density(mu.space(), std::move(h));
}

Rat mass_with_density(const Density& h, const Dist& nu, const Event& a) {
  if (h.space() != nu.space() || a.space() != nu.space())
    throw SpaceMismatch("mass_with_density: mismatched spaces");
  Rat total;
  for (Index i : a.members()) total += h.values()[i] * nu.weights()[i];
  return total;
}

Decomposition lebesgue_decompose(const Dist& mu, const Dist& nu) {
  require_same_space(mu, nu, "lebesgue_decompose");
  const Event carrier = support(nu);
  const Rat alpha = mass(mu, carrier);

  const auto normalized_restriction = [&](const Event& where, const Rat& total) {
    RatVec w = RatVec::Zero(mu.space().size());
    for (Index i : where.members()) w[i] = mu.weights()[i] / total;
    return Dist(mu.space(), std::move(w));
  };

  Decomposition d{alpha, std::nullopt, std::nullopt};
  if (!alpha.is_zero()) d.ac_part = normalized_restriction(carrier, alpha);
  if (alpha != Rat(1)) d.singular_part = normalized_restriction(carrier.complement(), Rat(1) - alpha);
  return d;
}

}  // namespace giry
