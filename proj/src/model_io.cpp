#include "giry/model_io.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "giry/errors.hpp"

namespace giry {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t limit = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') ++line;
    }
    fail("line " + std::to_string(line), e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Rat rat_at(const json& v, const std::string& where) {
  try {
    return parse_rat(as_string(v, where));
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

RatVec weights_from(const json& obj, const Space& space, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object of point -> rational");
  RatVec w = RatVec::Zero(space.size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!space.has_point(it.key())) {
      fail(where, "unknown point '" + it.key() + "' in space '" + space.label() + "'");
    }
    w(space.index_of(it.key())) = rat_at(it.value(), where + "." + it.key());
  }
  return w;
}

Dist dist_from(const json& obj, const Space& space, const std::string& where) {
  RatVec w = weights_from(obj, space, where);
  try {
    return Dist(space, std::move(w));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

const Space& space_named(const std::unordered_map<std::string, Space>& spaces,
                         const std::string& name, const std::string& where) {
  auto it = spaces.find(name);
  if (it == spaces.end()) fail(where, "unknown space '" + name + "'");
  return it->second;
}

}  // namespace

LoadedModel parse_model(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) fail("model", "expected a top-level object");

  const json& spaces_j = member(j, "spaces", "model");
  if (!spaces_j.is_object() || spaces_j.empty()) {
    fail("spaces", "expected a non-empty object of name -> point list");
  }
  std::unordered_map<std::string, Space> spaces;
  for (auto it = spaces_j.begin(); it != spaces_j.end(); ++it) {
    if (!it.value().is_array()) fail("spaces." + it.key(), "expected an array of point labels");
    std::vector<std::string> points;
    for (const auto& p : it.value()) points.push_back(as_string(p, "spaces." + it.key()));
    try {
      spaces.emplace(it.key(), Space(it.key(), std::move(points)));
    } catch (const Error& e) {
      fail("spaces." + it.key(), e.what());
    }
  }

  const json& prior_j = member(j, "prior", "model");
  const Space& x =
      space_named(spaces, as_string(member(prior_j, "space", "prior"), "prior.space"), "prior.space");
  Dist prior = dist_from(member(prior_j, "weights", "prior"), x, "prior.weights");

  const json& lik_j = member(j, "likelihood", "model");
  const Space& source = space_named(
      spaces, as_string(member(lik_j, "source", "likelihood"), "likelihood.source"),
      "likelihood.source");
  const Space& target = space_named(
      spaces, as_string(member(lik_j, "target", "likelihood"), "likelihood.target"),
      "likelihood.target");

  bool has_map = lik_j.is_object() && lik_j.contains("map");
  bool has_kernel = lik_j.is_object() && lik_j.contains("kernel");
  if (has_map == has_kernel) {
    fail("likelihood", "needs exactly one of 'map' or 'kernel'");
  }

  if (has_map) {
    const json& map_j = lik_j["map"];
    if (!map_j.is_object()) fail("likelihood.map", "expected an object of point -> point");
    for (auto it = map_j.begin(); it != map_j.end(); ++it) {
      if (!source.has_point(it.key())) {
        fail("likelihood.map", "unknown point '" + it.key() + "' in space '" + source.label() + "'");
      }
    }
    std::vector<Index> assignment;
    for (Index i = 0; i < source.size(); ++i) {
      auto it = map_j.find(source.point(i));
      if (it == map_j.end()) fail("likelihood.map", "no assignment for point '" + source.point(i) + "'");
      std::string where = "likelihood.map." + source.point(i);
      std::string label = as_string(*it, where);
      if (!target.has_point(label)) {
        fail(where, "unknown point '" + label + "' in space '" + target.label() + "'");
      }
      assignment.push_back(target.index_of(label));
    }
    try {
      DeterministicModel det(std::move(prior), Map(source, target, std::move(assignment)));
      BayesModel bayes = as_bayes(det);
      return LoadedModel{std::move(bayes), std::move(det)};
    } catch (const Error& e) {
      fail("model", e.what());
    }
  }

  const json& kernel_j = lik_j["kernel"];
  if (!kernel_j.is_object()) fail("likelihood.kernel", "expected an object of point -> row");
  for (auto it = kernel_j.begin(); it != kernel_j.end(); ++it) {
    if (!source.has_point(it.key())) {
      fail("likelihood.kernel", "unknown point '" + it.key() + "' in space '" + source.label() + "'");
    }
  }
  std::vector<Dist> rows;
  for (Index i = 0; i < source.size(); ++i) {
    auto it = kernel_j.find(source.point(i));
    if (it == kernel_j.end()) fail("likelihood.kernel", "no row for point '" + source.point(i) + "'");
    rows.push_back(dist_from(*it, target, "likelihood.kernel." + source.point(i)));
  }
  try {
    return LoadedModel{BayesModel(std::move(prior), Kernel::from_rows(source, std::move(rows))),
                       std::nullopt};
  } catch (const Error& e) {
    fail("model", e.what());
  }
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

LoadedModel load_model_file(const std::string& path) {
  std::string text = slurp(path);
  try {
    return parse_model(text);
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Kernel parse_candidate(const std::string& text, const BayesModel& model) {
  json j = parse_json(text);
  const json* rows_j = nullptr;
  if (j.is_object() && j.contains("joint_kernel")) {
    rows_j = &j["joint_kernel"];
  } else if (j.is_object() && j.contains("candidate")) {
    rows_j = &j["candidate"];
  } else {
    fail("candidate", "expected a 'candidate' or 'joint_kernel' section");
  }
  if (!rows_j->is_object()) fail("candidate", "expected an object of point -> row");

  const Space& y = model.likelihood.target();
  ProductSpace xy(model.prior.space(), y);
  const Space& pairs = xy.space();

  for (auto it = rows_j->begin(); it != rows_j->end(); ++it) {
    if (!y.has_point(it.key())) {
      fail("candidate", "unknown row '" + it.key() + "' for space '" + y.label() + "'");
    }
  }
  RatMat rows(y.size(), pairs.size());
  for (Index yi = 0; yi < y.size(); ++yi) {
    auto it = rows_j->find(y.point(yi));
    if (it == rows_j->end()) fail("candidate", "missing row for '" + y.point(yi) + "'");
    rows.row(yi) = weights_from(*it, pairs, "candidate." + y.point(yi)).transpose();
  }
  try {
    return Kernel(y, pairs, std::move(rows));
  } catch (const Error& e) {
    fail("candidate", e.what());
  }
}

Kernel load_candidate_file(const std::string& path, const BayesModel& model) {
  std::string text = slurp(path);
  try {
    return parse_candidate(text, model);
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

namespace {

json dist_object(const Dist& p) {
  json o = json::object();
  for (Index i = 0; i < p.space().size(); ++i) o[p.space().point(i)] = to_string(p.weight(i));
  return o;
}

json kernel_object(const Kernel& k) {
  json o = json::object();
  for (Index i = 0; i < k.source().size(); ++i) {
    json row = json::object();
    for (Index j = 0; j < k.target().size(); ++j) {
      row[k.target().point(j)] = to_string(k.rows()(i, j));
    }
    o[k.source().point(i)] = std::move(row);
  }
  return o;
}

}  // namespace

std::string format_report(const InferenceResult& result) {
  json j = json::object();
  j["method"] = result.method == Method::rn ? "rn" : "decomp";
  j["joint"] = dist_object(result.joint);
  j["marginal"] = dist_object(result.marginal_y);
  json v = json::array();
  for (Index m : result.v.members()) v.push_back(result.v.space().point(m));
  j["V"] = std::move(v);
  j["joint_kernel"] = kernel_object(result.joint_kernel);
  j["posterior"] = kernel_object(result.posterior);
  if (result.method == Method::decomp) {
    json alpha = json::object();
    const Space& y = result.marginal_y.space();
    for (Index i = 0; i < y.size(); ++i) {
      alpha[y.point(i)] = to_string(result.alpha[static_cast<std::size_t>(i)]);
    }
    j["alpha"] = std::move(alpha);
  }
  return j.dump(2) + "\n";
}

}  // namespace giry
