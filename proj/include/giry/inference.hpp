#pragma once

#include <optional>
#include <vector>

#include "giry/strength.hpp"

namespace giry {

/// A Bayesian model: a prior on X and a likelihood kernel X -> G(Y).
struct BayesModel {
  BayesModel(Dist prior_in, Kernel likelihood_in);

  Dist prior;
  Kernel likelihood;
};

/// The deterministic special case: the likelihood is induced by a map f.
struct DeterministicModel {
  DeterministicModel(Dist prior_in, Map f_in);

  Dist prior;
  Map f;
};

BayesModel as_bayes(const DeterministicModel& model);

/// The joint measure P on X*Y determined by the model.
Dist joint(const BayesModel& model);
Dist joint(const DeterministicModel& model);  // = prior Gamma_f^{-1}

enum class Method { rn, decomp };

/// Everything an inference run produces.  joint_kernel is the inference map
/// Y -> G(X*Y); posterior is its X-marginal Y -> G(X).  Rows at points
/// outside v (the support of marginal_y) carry the joint itself, so the
/// kernel stays total; those rows never contribute to the defining equation
/// kernel_apply(joint_kernel, marginal_y) == joint, which holds exactly.
struct InferenceResult {
  ProductSpace xy;
  Dist joint;
  Dist marginal_y;
  Event v;
  Kernel joint_kernel;
  Kernel posterior;
  Method method;

  /// Method rn only: the derivative of the joint against prior (x) marginal,
  /// on the product space the deterministic solve ran on.
  std::optional<Density> density;

  /// Method decomp only: one entry per target point, the weight of the
  /// absolutely continuous part in the split of the joint against
  /// prior Gamma_y^{-1}.  Equals marginal_y(y); zero exactly off v.
  std::vector<Rat> alpha;
};

/// Method 1: density route.  Takes the derivative h of the joint against
/// prior (x) marginal and integrates it over the slice measures
/// prior Gamma_y^{-1}; row(y) has weight h(x,y) * prior(x) at (x,y).
InferenceResult infer_rn(const DeterministicModel& model);

/// Method 2: decomposition route.  For each y, splits the joint against
/// prior Gamma_y^{-1} and keeps the absolutely continuous part as row(y).
InferenceResult infer_decomp(const DeterministicModel& model);

/// Rewrites a general model as the deterministic model (joint, pi_Y) on the
/// product space; solving that one solves the original.
DeterministicModel reduce_nondet(const BayesModel& model);

/// Full pipeline for arbitrary models: reduce to the deterministic case,
/// solve with the chosen method, and push the resulting rows back down to
/// X*Y and X.
InferenceResult infer(const BayesModel& model, Method method);

/// P_{X|Y} from P_{X*Y|Y}: marginalize each row along pi_X.
Kernel posterior_from_joint_kernel(const ProductSpace& xy, const Kernel& joint_kernel);

/// P_{X*Y|Y} from P_{X|Y}: embed row(y) on the slice X x {y}.  Inverse to
/// posterior_from_joint_kernel.
Kernel joint_kernel_from_posterior(const Kernel& posterior);

/// A point where a candidate inference map fails the defining equation,
/// together with both masses there.
struct BayesWitness {
  Event zeta;
  Rat joint_mass;
  Rat candidate_mass;
};

/// Checks the defining equation kernel_apply(candidate, marginal_y) == joint
/// exactly, evaluated as the monadic composite mu(G(candidate)(marginal_y)).
/// Returns the first failing point, or nullopt when the candidate verifies.
std::optional<BayesWitness> bayes_witness(const BayesModel& model, const Kernel& candidate);

bool verify_bayes(const BayesModel& model, const Kernel& candidate);
bool verify_bayes(const DeterministicModel& model, const Kernel& candidate);

}  // namespace giry
