#include "giry/inference.hpp"

#include <cstddef>
#include <utility>

#include "giry/errors.hpp"

namespace giry {

namespace {

struct JointPieces {
  ProductSpace xy;
  Dist joint;
  Dist marginal_y;
};

JointPieces pieces_of(const DeterministicModel& model) {
  ProductSpace xy(model.prior.space(), model.f.target());
  Dist jt = pushforward(graph_map(model.f), model.prior);
  Dist marg = pushforward(proj_right(xy), jt);
  return {std::move(xy), std::move(jt), std::move(marg)};
}

void require_bayes(const Kernel& joint_kernel, const Dist& marginal_y, const Dist& jt) {
  if (kernel_apply(joint_kernel, marginal_y) != jt) {
    throw InvariantViolation("inference produced a kernel that fails the defining equation");
  }
}

void require_v_is_support(const Event& v, const Dist& marginal_y) {
  if (v != support(marginal_y)) {
    throw InvariantViolation("inference domain differs from the support of the marginal");
  }
}

}  // namespace

BayesModel::BayesModel(Dist prior_in, Kernel likelihood_in)
    : prior(std::move(prior_in)), likelihood(std::move(likelihood_in)) {
  if (likelihood.source() != prior.space()) {
    throw SpaceMismatch("likelihood source '" + likelihood.source().label() +
                        "' differs from the prior's space '" + prior.space().label() + "'");
  }
}

DeterministicModel::DeterministicModel(Dist prior_in, Map f_in)
    : prior(std::move(prior_in)), f(std::move(f_in)) {
  if (f.source() != prior.space()) {
    throw SpaceMismatch("map source '" + f.source().label() +
                        "' differs from the prior's space '" + prior.space().label() + "'");
  }
}

BayesModel as_bayes(const DeterministicModel& model) {
  return BayesModel(model.prior, det_kernel(model.f));
}

Dist joint(const BayesModel& model) { return joint_from_kernel(model.prior, model.likelihood); }

Dist joint(const DeterministicModel& model) {
  return pushforward(graph_map(model.f), model.prior);
}

InferenceResult infer_rn(const DeterministicModel& model) {
  JointPieces p = pieces_of(model);
  const Space& x_space = p.xy.left();
  const Space& y_space = p.xy.right();
  const Index pairs = p.xy.space().size();

  Dist base = tensor(model.prior, p.marginal_y);
  std::optional<Density> h;
  try {
    h = rn_derivative(p.joint, base);
  } catch (const NotAbsolutelyContinuous&) {
    // supp(joint) is contained in supp(prior) x supp(marginal) by construction
    throw InvariantViolation("joint is not absolutely continuous against prior (x) marginal");
  }

  std::vector<Index> v_members;
  RatMat rows(y_space.size(), pairs);
  for (Index y = 0; y < y_space.size(); ++y) {
    Rat slice_mass(0);
    for (Index x = 0; x < x_space.size(); ++x) {
      slice_mass += h->value(p.xy.pair_index(x, y)) * model.prior.weight(x);
    }
    if (slice_mass == Rat(1)) {
      v_members.push_back(y);
      for (Index x = 0; x < x_space.size(); ++x) {
        Index pair = p.xy.pair_index(x, y);
        rows(y, pair) = h->value(pair) * model.prior.weight(x);
      }
    } else if (slice_mass == Rat(0)) {
      rows.row(y) = p.joint.weights().transpose();
    } else {
      throw InvariantViolation("slice integral of the derivative is neither 0 nor 1");
    }
  }
  Event v(y_space, std::move(v_members));
  require_v_is_support(v, p.marginal_y);

  Kernel joint_kernel(y_space, p.xy.space(), std::move(rows));
  require_bayes(joint_kernel, p.marginal_y, p.joint);
  Kernel posterior = posterior_from_joint_kernel(p.xy, joint_kernel);

  return InferenceResult{std::move(p.xy),        std::move(p.joint), std::move(p.marginal_y),
                         std::move(v),           std::move(joint_kernel), std::move(posterior),
                         Method::rn,             std::move(h),       {}};
}

InferenceResult infer_decomp(const DeterministicModel& model) {
  JointPieces p = pieces_of(model);
  const Space& y_space = p.xy.right();

  std::vector<Index> v_members;
  std::vector<Rat> alpha(static_cast<std::size_t>(y_space.size()));
  RatMat rows(y_space.size(), p.xy.space().size());
  for (Index y = 0; y < y_space.size(); ++y) {
    Dist nu_y = tau_rl(model.prior, y_space, y);
    Decomposition split = lebesgue_decompose(p.joint, nu_y);
    alpha[static_cast<std::size_t>(y)] = split.alpha;
    if (split.alpha != Rat(0)) {
      if (!split.ac_part) {
        throw InvariantViolation("decomposition with positive alpha lacks its continuous part");
      }
      v_members.push_back(y);
      rows.row(y) = split.ac_part->weights().transpose();
    } else {
      rows.row(y) = p.joint.weights().transpose();
    }
  }
  Event v(y_space, std::move(v_members));
  require_v_is_support(v, p.marginal_y);

  Kernel joint_kernel(y_space, p.xy.space(), std::move(rows));
  require_bayes(joint_kernel, p.marginal_y, p.joint);
  Kernel posterior = posterior_from_joint_kernel(p.xy, joint_kernel);

  return InferenceResult{std::move(p.xy),        std::move(p.joint), std::move(p.marginal_y),
                         std::move(v),           std::move(joint_kernel), std::move(posterior),
                         Method::decomp,         std::nullopt,       std::move(alpha)};
}

DeterministicModel reduce_nondet(const BayesModel& model) {
  ProductSpace xy(model.prior.space(), model.likelihood.target());
  return DeterministicModel(joint_from_kernel(model.prior, model.likelihood), proj_right(xy));
}

InferenceResult infer(const BayesModel& model, Method method) {
  ProductSpace xy(model.prior.space(), model.likelihood.target());
  DeterministicModel reduced = reduce_nondet(model);
  InferenceResult sub = method == Method::rn ? infer_rn(reduced) : infer_decomp(reduced);

  // sub lives on (X*Y)*Y; collapse each row back down to X*Y.
  const Space& y_space = xy.right();
  Map down = proj_left(sub.xy);
  RatMat rows(y_space.size(), xy.space().size());
  for (Index y = 0; y < y_space.size(); ++y) {
    rows.row(y) = pushforward(down, sub.joint_kernel.row(y)).weights().transpose();
  }
  Kernel joint_kernel(y_space, xy.space(), std::move(rows));
  require_bayes(joint_kernel, sub.marginal_y, reduced.prior);
  Kernel posterior = posterior_from_joint_kernel(xy, joint_kernel);

  return InferenceResult{std::move(xy),           std::move(reduced.prior),
                         std::move(sub.marginal_y), std::move(sub.v),
                         std::move(joint_kernel), std::move(posterior),
                         method,                  std::move(sub.density),
                         std::move(sub.alpha)};
}

Kernel posterior_from_joint_kernel(const ProductSpace& xy, const Kernel& joint_kernel) {
  if (joint_kernel.target() != xy.space()) {
    throw SpaceMismatch("joint kernel targets '" + joint_kernel.target().label() +
                        "', not the product '" + xy.space().label() + "'");
  }
  return kleisli_compose(det_kernel(proj_left(xy)), joint_kernel);
}

Kernel joint_kernel_from_posterior(const Kernel& posterior) {
  const Space& y_space = posterior.source();
  ProductSpace xy(posterior.target(), y_space);
  RatMat rows(y_space.size(), xy.space().size());
  for (Index y = 0; y < y_space.size(); ++y) {
    rows.row(y) = tau_rl(posterior.row(y), y_space, y).weights().transpose();
  }
  return Kernel(y_space, xy.space(), std::move(rows));
}

std::optional<BayesWitness> bayes_witness(const BayesModel& model, const Kernel& candidate) {
  ProductSpace xy(model.prior.space(), model.likelihood.target());
  if (candidate.source() != model.likelihood.target() || candidate.target() != xy.space()) {
    throw SpaceMismatch("candidate must map the observation space into distributions on '" +
                        xy.space().label() + "'");
  }
  Dist jt = joint_from_kernel(model.prior, model.likelihood);
  Dist marginal_y = pushforward(proj_right(xy), jt);

  std::vector<Dist> inners;
  inners.reserve(static_cast<std::size_t>(candidate.source().size()));
  for (Index y = 0; y < candidate.source().size(); ++y) inners.push_back(candidate.row(y));
  Dist predicted = mu(MetaDist(marginal_y, std::move(inners)));

  for (Index pair = 0; pair < xy.space().size(); ++pair) {
    if (predicted.weight(pair) != jt.weight(pair)) {
      return BayesWitness{Event(xy.space(), {pair}), jt.weight(pair), predicted.weight(pair)};
    }
  }
  return std::nullopt;
}

bool verify_bayes(const BayesModel& model, const Kernel& candidate) {
  return !bayes_witness(model, candidate).has_value();
}

bool verify_bayes(const DeterministicModel& model, const Kernel& candidate) {
  return verify_bayes(as_bayes(model), candidate);
}

}  // namespace giry
