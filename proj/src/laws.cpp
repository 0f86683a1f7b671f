#include "giry/laws.hpp"

#include <cstddef>
#include <sstream>
#include <utility>

#include "giry/errors.hpp"

namespace giry {

namespace {

/// One law body: draws a case from the stream and either returns true or
/// describes the failure.
using Body = std::function<bool(Rng&, std::string*)>;

class Runner {
 public:
  explicit Runner(const LawsConfig& config) : config_(config) {
    report_.seed = config.seed;
    report_.max_points = config.max_points;
    report_.trials = config.trials;
    report_.max_denominator = config.max_denominator;
  }

  void add(std::string name, const Body& body) {
    LawCheck check;
    check.name = std::move(name);
    // Distinct stream per check, derived from the seed and the check's
    // position; appending new checks leaves earlier streams untouched.
    Rng rng(config_.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(report_.checks.size()));
    for (int trial = 0; trial < config_.trials; ++trial) {
      std::string diag;
      bool ok = false;
      try {
        ok = body(rng, &diag);
      } catch (const Error& err) {
        diag = std::string("exception: ") + err.what();
      }
      ++check.cases;
      if (!ok) {
        check.passed = false;
        std::ostringstream os;
        os << "trial " << trial << ": " << diag;
        check.counterexample = os.str();
        break;
      }
    }
    report_.checks.push_back(std::move(check));
  }

  LawsReport take() { return std::move(report_); }

 private:
  const LawsConfig& config_;
  LawsReport report_;
};

Event random_event(Rng& rng, const Space& space) {
  std::vector<Index> members;
  for (Index i = 0; i < space.size(); ++i) {
    if (rng.pick(2) == 1) members.push_back(i);
  }
  return Event(space, std::move(members));
}

std::string show(const Dist& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

bool LawsReport::all_passed() const {
  for (const auto& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

LawsReport run_laws(const LawsConfig& config) {
  const Index mp = config.max_points;
  const Index md = config.max_denominator;
  auto flat = [&config](const MetaDist& m) { return config.mu_impl ? config.mu_impl(m) : mu(m); };

  Runner runner(config);

  runner.add("monad left unit", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Dist p = random_dist(rng, x, md);
    Dist outer = dirac(Space("O", {"p"}), Index(0));
    Dist flattened = flat(MetaDist(outer, {p}));
    if (flattened == p) return true;
    *diag = "mu(dirac(P)) = " + show(flattened) + " but P = " + show(p);
    return false;
  });

  runner.add("monad right unit", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Dist p = random_dist(rng, x, md);
    std::vector<Dist> units;
    for (Index i = 0; i < x.size(); ++i) units.push_back(dirac(x, i));
    Dist flattened = flat(MetaDist(p, std::move(units)));
    if (flattened == p) return true;
    *diag = "mu(G(dirac)(P)) = " + show(flattened) + " but P = " + show(p);
    return false;
  });

  runner.add("monad associativity", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Index mid_count = 1 + rng.pick(3);
    std::vector<MetaDist> mids;
    for (Index i = 0; i < mid_count; ++i) {
      Index inner_count = 1 + rng.pick(3);
      std::vector<std::string> labels;
      std::vector<Dist> inners;
      for (Index j = 0; j < inner_count; ++j) {
        labels.push_back("o" + std::to_string(i) + "_" + std::to_string(j));
        inners.push_back(random_dist(rng, x, md));
      }
      Space o("O" + std::to_string(i), std::move(labels));
      mids.emplace_back(random_dist(rng, o, md), std::move(inners));
    }
    std::vector<std::string> top_labels;
    for (Index i = 0; i < mid_count; ++i) top_labels.push_back("t" + std::to_string(i));
    Dist top = random_dist(rng, Space("T", std::move(top_labels)), md);

    // mu after G(mu): flatten each mid first.
    std::vector<Dist> flattened_mids;
    for (const auto& mid : mids) flattened_mids.push_back(flat(mid));
    Dist via_inner = flat(MetaDist(top, std::move(flattened_mids)));

    // mu after mu: flatten the outer two layers by hand (weight products),
    // then the hook.
    std::vector<std::string> pair_labels;
    std::vector<Rat> pair_weights;
    std::vector<Dist> pair_inners;
    for (Index i = 0; i < mid_count; ++i) {
      const MetaDist& mid = mids[static_cast<std::size_t>(i)];
      for (Index j = 0; j < mid.outer().space().size(); ++j) {
        pair_labels.push_back("t" + std::to_string(i) + "." + std::to_string(j));
        pair_weights.push_back(top.weight(i) * mid.outer().weight(j));
        pair_inners.push_back(mid.inner(j));
      }
    }
    RatVec w(static_cast<Index>(pair_weights.size()));
    for (Index i = 0; i < w.size(); ++i) w(i) = pair_weights[static_cast<std::size_t>(i)];
    Dist squashed(Space("TO", std::move(pair_labels)), std::move(w));
    Dist via_outer = flat(MetaDist(std::move(squashed), std::move(pair_inners)));

    if (via_inner == via_outer) return true;
    *diag = "mu(G(mu)(Xi)) = " + show(via_inner) + " but mu(mu(Xi)) = " + show(via_outer);
    return false;
  });

  runner.add("kleisli unit", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Space y = random_space(rng, "Y", mp);
    Kernel k = random_kernel(rng, x, y, md);
    Kernel pre = kleisli_compose(k, det_kernel(identity_map(x)));
    Kernel post = kleisli_compose(det_kernel(identity_map(y)), k);
    if (pre == k && post == k) return true;
    *diag = "composition with an identity kernel changed the kernel";
    return false;
  });

  runner.add("kleisli associativity", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Space y = random_space(rng, "Y", mp);
    Space z = random_space(rng, "Z", mp);
    Space w = random_space(rng, "W", mp);
    Kernel f = random_kernel(rng, x, y, md);
    Kernel g = random_kernel(rng, y, z, md);
    Kernel h = random_kernel(rng, z, w, md);
    Kernel left = kleisli_compose(h, kleisli_compose(g, f));
    Kernel right = kleisli_compose(kleisli_compose(h, g), f);
    if (left == right) return true;
    *diag = "(h * g) * f differs from h * (g * f)";
    return false;
  });

  runner.add("deterministic functoriality", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Space y = random_space(rng, "Y", mp);
    Space z = random_space(rng, "Z", mp);
    Map f = random_map(rng, x, y);
    Map g = random_map(rng, y, z);
    if (det_kernel(compose(g, f)) == kleisli_compose(det_kernel(g), det_kernel(f))) return true;
    *diag = "delta_{g o f} differs from delta_g * delta_f";
    return false;
  });

  runner.add("strength naturality", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Space x2 = random_space(rng, "X'", mp);
    Space y = random_space(rng, "Y", mp);
    Space y2 = random_space(rng, "Y'", mp);
    Map f = random_map(rng, x, x2);
    Map g = random_map(rng, y, y2);
    std::vector<TauSample> samples;
    Index count = 1 + rng.pick(3);
    for (Index i = 0; i < count; ++i) {
      samples.push_back(TauSample{rng.pick(x.size()), random_dist(rng, y, md)});
    }
    return check_tau_naturality(f, g, samples, diag);
  });

  runner.add("strength functor action", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Space y = random_space(rng, "Y", mp);
    Map f = random_map(rng, x, y);
    Dist p = random_dist(rng, x, md);
    Dist via_strength = st(f)(p);
    Dist direct = pushforward(f, p);
    Dist fixed = st(identity_map(x))(p);
    if (via_strength == direct && fixed == p) return true;
    *diag = "st(f)(P) = " + show(via_strength) + " but P f^{-1} = " + show(direct);
    return false;
  });

  runner.add("joint marginals", [&](Rng& rng, std::string* diag) {
    BayesModel model = random_model(rng, mp, md);
    ProductSpace xy(model.prior.space(), model.likelihood.target());
    Dist jt = joint(model);
    Dist left = pushforward(proj_left(xy), jt);
    Dist right = pushforward(proj_right(xy), jt);
    Dist predictive = kernel_apply(model.likelihood, model.prior);
    if (left == model.prior && right == predictive) return true;
    *diag = "joint marginals " + show(left) + " / " + show(right) +
            " differ from prior / predictive";
    return false;
  });

  runner.add("derivative round trip", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Dist nu = random_dist(rng, x, md);
    Dist m = random_dist_within(rng, support(nu), md);
    Density h = rn_derivative(m, nu);
    std::vector<Event> events;
    for (Index i = 0; i < x.size(); ++i) events.push_back(Event(x, {i}));
    events.push_back(Event::full(x));
    events.push_back(random_event(rng, x));
    for (const Event& a : events) {
      if (mass_with_density(h, nu, a) != mass(m, a)) {
        *diag = "integral of d" + show(m) + "/d" + show(nu) + " misses on an event";
        return false;
      }
    }
    return true;
  });

  runner.add("decomposition reconstruction", [&](Rng& rng, std::string* diag) {
    Space x = random_space(rng, "X", mp);
    Dist m = random_dist(rng, x, md);
    Dist nu = random_dist(rng, x, md);
    Decomposition d = lebesgue_decompose(m, nu);
    RatVec rebuilt = RatVec::Zero(x.size());
    if (d.ac_part) rebuilt += (d.alpha * d.ac_part->weights()).eval();
    if (d.singular_part) rebuilt += ((Rat(1) - d.alpha) * d.singular_part->weights()).eval();
    if (RatVec(rebuilt) != m.weights()) {
      *diag = "alpha P_a + (1-alpha) P_s fails to rebuild " + show(m);
      return false;
    }
    if (d.ac_part && !absolutely_continuous(*d.ac_part, nu)) {
      *diag = "continuous part " + show(*d.ac_part) + " not << " + show(nu);
      return false;
    }
    if (d.singular_part && !mutually_singular(*d.singular_part, nu)) {
      *diag = "singular part " + show(*d.singular_part) + " not _|_ " + show(nu);
      return false;
    }
    return true;
  });

  runner.add("bayes equation, density method", [&](Rng& rng, std::string* diag) {
    BayesModel model = random_model(rng, mp, md);
    InferenceResult r = infer(model, Method::rn);
    if (verify_bayes(model, r.joint_kernel) && r.v == support(r.marginal_y)) return true;
    *diag = "inferred kernel fails its own defining equation";
    return false;
  });

  runner.add("bayes equation, decomposition method", [&](Rng& rng, std::string* diag) {
    BayesModel model = random_model(rng, mp, md);
    InferenceResult r = infer(model, Method::decomp);
    if (verify_bayes(model, r.joint_kernel) && r.v == support(r.marginal_y)) return true;
    *diag = "inferred kernel fails its own defining equation";
    return false;
  });

  runner.add("method agreement", [&](Rng& rng, std::string* diag) {
    BayesModel model = random_model(rng, mp, md);
    InferenceResult a = infer(model, Method::rn);
    InferenceResult b = infer(model, Method::decomp);
    if (a.joint_kernel == b.joint_kernel && a.posterior == b.posterior && a.v == b.v) return true;
    *diag = "density and decomposition methods disagree";
    return false;
  });

  return runner.take();
}

std::string format_laws(const LawsReport& report) {
  std::ostringstream os;
  os << "laws seed=" << report.seed << " trials=" << report.trials
     << " max-points=" << report.max_points << " max-denominator=" << report.max_denominator
     << "\n";
  int failed = 0;
  for (const auto& check : report.checks) {
    if (check.passed) {
      os << "[ok]   " << check.name << " (" << check.cases << " cases)\n";
    } else {
      ++failed;
      os << "[FAIL] " << check.name << "\n       " << check.counterexample << "\n";
    }
  }
  if (failed == 0) {
    os << "all " << report.checks.size() << " checks passed\n";
  } else {
    os << failed << " of " << report.checks.size() << " checks failed\n";
  }
  return os.str();
}

}  // namespace giry
