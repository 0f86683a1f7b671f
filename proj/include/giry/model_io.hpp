#pragma once

#include <optional>
#include <string>

#include "giry/inference.hpp"

namespace giry {

/// A model read from a file.  Deterministic files ("map" likelihood) keep the
/// map alongside the kernel form so callers can reach the deterministic API.
struct LoadedModel {
  BayesModel bayes;
  std::optional<DeterministicModel> deterministic;
};

/// Model files are JSON:
///
///   {
///     "spaces": {"X": ["x1","x2","x3"], "Y": ["a","b"]},
///     "prior": {"space": "X", "weights": {"x1": "1/2", "x2": "1/4", "x3": "1/4"}},
///     "likelihood": {"source": "X", "target": "Y", "map": {"x1":"a","x2":"a","x3":"b"}}
///   }
///
/// A nondeterministic likelihood replaces "map" with "kernel":
///   "kernel": {"x1": {"a":"1/2","b":"1/2"}, ...}
///
/// Rationals travel as strings ("a/b" or "a"); omitted weight entries are 0.
/// Throws ParseError with a line-anchored message on malformed input.
LoadedModel parse_model(const std::string& text);
LoadedModel load_model_file(const std::string& path);

/// A candidate inference map Y -> G(X*Y) for the given model.  Accepts either
/// a bare candidate file
///
///   {"candidate": {"a": {"(x1,a)": "2/3", "(x2,a)": "1/3"}, "b": {"(x3,b)": "1"}}}
///
/// or a full report (its "joint_kernel" section is read), so reports round
/// trip through verification unchanged.
Kernel parse_candidate(const std::string& text, const BayesModel& model);
Kernel load_candidate_file(const std::string& path, const BayesModel& model);

/// Canonical report serialization: JSON with fixed key order, every point
/// written explicitly, rationals in lowest terms.  Byte-deterministic for a
/// given result.
std::string format_report(const InferenceResult& result);

}  // namespace giry
