#include "giry/kernel.hpp"

#include <string>

#include "giry/errors.hpp"

namespace giry {

Kernel::Kernel(Space source, Space target, RatMat rows)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)) {
  if (rows_.rows() != source_.size() || rows_.cols() != target_.size())
    throw InvalidValue("kernel " + source_.label() + "->" + target_.label() + ": matrix is " +
                       std::to_string(rows_.rows()) + "x" + std::to_string(rows_.cols()));
  for (Index x = 0; x < rows_.rows(); ++x) {
    Rat total;
    for (Index y = 0; y < rows_.cols(); ++y) {
      if (rows_(x, y).is_negative())
        throw InvalidValue("kernel " + source_.label() + "->" + target_.label() +
                           ": negative weight in row '" + source_.point(x) + "'");
      total += rows_(x, y);
    }
    if (total != Rat(1))
      throw InvalidValue("kernel " + source_.label() + "->" + target_.label() + ": row '" +
                         source_.point(x) + "' sums to " + to_string(total));
  }
}

Kernel Kernel::from_rows(Space source, std::vector<Dist> rows) {
  if (rows.empty() || static_cast<Index>(rows.size()) != source.size())
    throw InvalidValue("kernel from '" + source.label() + "': need one row per source point");
  const Space& target = rows.front().space();
  RatMat m(source.size(), target.size());
  for (Index x = 0; x < source.size(); ++x) {
    const Dist& r = rows[static_cast<std::size_t>(x)];
    if (r.space() != target)
      throw SpaceMismatch("kernel from '" + source.label() + "': row '" + source.point(x) +
                          "' lives on '" + r.space().label() + "', expected '" +
                          target.label() + "'");
    m.row(x) = r.weights().transpose();
  }
  return Kernel(std::move(source), target, std::move(m));
}

Dist Kernel::row(Index source_point) const {
  if (source_point < 0 || source_point >= source_.size())
    throw UnknownPoint("kernel " + source_.label() + "->" + target_.label() + ": no row #" +
                       std::to_string(source_point));
  return Dist(target_, rows_.row(source_point).transpose());
}

Dist Kernel::row(std::string_view source_label) const {
  return row(source_.index_of(source_label));
}

std::ostream& operator<<(std::ostream& os, const Kernel& k) {
  os << k.source().label() << "->" << k.target().label() << "[";
  for (Index x = 0; x < k.source().size(); ++x) {
    if (x) os << "; ";
    os << k.source().point(x) << " -> " << k.row(x);
  }
  return os << "]";
}

Kernel det_kernel(const Map& f) {
  RatMat m = RatMat::Zero(f.source().size(), f.target().size());
  for (Index x = 0; x < f.source().size(); ++x) m(x, f(x)) = Rat(1);
  return Kernel(f.source(), f.target(), std::move(m));
}

MetaDist::MetaDist(Dist outer, std::vector<Dist> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.empty() || static_cast<Index>(inner_.size()) != outer_.space().size())
    throw InvalidValue("meta-distribution: need one inner distribution per outer point");
  for (const Dist& d : inner_)
    if (d.space() != inner_.front().space())
      throw SpaceMismatch("meta-distribution: inner distributions on different spaces");
}

const Dist& MetaDist::inner(Index i) const {
  if (i < 0 || i >= static_cast<Index>(inner_.size()))
    throw UnknownPoint("meta-distribution: no inner #" + std::to_string(i));
  return inner_[static_cast<std::size_t>(i)];
}

Dist mu(const MetaDist& m) {
  RatVec w = RatVec::Zero(m.inner_space().size());
  for (Index i = 0; i < m.outer().weights().size(); ++i)
    w += m.outer().weights()[i] * m.inner(i).weights();
  return Dist(m.inner_space(), std::move(w));
}

Kernel kleisli_compose(const Kernel& after, const Kernel& before) {
  if (before.target() != after.source())
    throw SpaceMismatch("kleisli_compose: '" + before.target().label() + "' feeds '" +
                        after.source().label() + "'");
  return Kernel(before.source(), after.target(), before.rows() * after.rows());
}

Dist kernel_apply(const Kernel& k, const Dist& p) {
  if (p.space() != k.source())
    throw SpaceMismatch("kernel_apply: distribution on '" + p.space().label() +
                        "', kernel from '" + k.source().label() + "'");
  return Dist(k.target(), k.rows().transpose() * p.weights());
}

}  // namespace giry
