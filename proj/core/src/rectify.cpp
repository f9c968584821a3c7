#include "cremona/rectify.hpp"

#include <chrono>
#include <utility>

#include "cremona/matrix.hpp"

namespace cremona {

namespace {

std::string surface_brief(const ParamSurface& s) {
  return "bidegree (" + std::to_string(s.ruling_degree()) + "," +
         std::to_string(s.section_degree()) + ")";
}

BiForm random_section(int height, Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    BiForm g(1, 1);
    for (int i = 0; i <= 1; ++i)
      for (int j = 0; j <= 1; ++j) g.set(i, j, rng.rational(height));
    if (!g.is_zero()) return g;
  }
  throw std::runtime_error("random draws keep producing the zero form");
}

// A common factor of the last three forms would become the stripped factor
// after a single projection, so base the section on it when there is one.
// On a surface with the first coordinate point off the image the gcd is
// constant (the factor's zero locus would map there), and the section is a
// random draw shared by all stages of the step.
BiForm section_for_step(const ParamSurface& s, int height, Rng& rng) {
  const auto& f = s.forms();
  BiForm g = BiForm::gcd(BiForm::gcd(f[1], f[2]), f[3]);
  if (g.deg_st() == 1 && g.deg_uv() == 1) return g;
  if (g.deg_st() == 1 && g.deg_uv() == 0) {
    BiForm tail(0, 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
      tail.set(0, 0, rng.rational(height));
      tail.set(0, 1, rng.rational(height));
      if (!tail.is_zero()) return g * tail;
    }
  }
  return random_section(height, rng);
}

CremonaMap swap_orientation(const CremonaMap& m) {
  return CremonaMap{m.inverse, m.forward, m.source_monoid, m.inverse_degree,
                    m.forward_degree};
}

// One projection pair on `current`: searches the (beta, d) grid in
// lexicographic order, builds the oriented map of the first monoid that
// survives the map checks, and applies it. Throws SearchExhausted when the
// grid holds no monoid at all.
StageRecord run_stage(const ParamSurface& current, int stage_index,
                      const BiForm& gamma, const RectifyConfig& config,
                      Rng& rng, std::string& log) {
  const std::string tag = "  stage " + std::to_string(stage_index) + ": ";
  for (int beta = 1; beta <= config.beta_max; ++beta) {
    LambdaOptions opt;
    opt.certify = false;
    opt.height = config.lambda_height;
    opt.gamma = &gamma;
    Rng lambda_rng = rng.fork("lambda", static_cast<std::uint64_t>(beta));
    std::vector<LambdaRealization> built;
    try {
      built.push_back(build_lambda_M(current, beta, lambda_rng, opt));
    } catch (const std::runtime_error& e) {
      log += tag + "beta=" + std::to_string(beta) +
             " embedding failed: " + e.what() + "\n";
      continue;
    }
    const LambdaRealization& lam = built.front();

    for (int d = 2; d <= config.d_max; ++d) {
      Rng cell = rng.fork("cell", static_cast<std::uint64_t>(beta) * 100 +
                                      static_cast<std::uint64_t>(d));
      std::optional<Monoid> monoid;
      try {
        monoid = find_double_vertex_monoid(lam.result, d, cell);
      } catch (const std::domain_error& e) {
        log += tag + "beta=" + std::to_string(beta) + " d=" +
               std::to_string(d) + " search error: " + e.what() + "\n";
        continue;
      }
      if (!monoid) {
        log += tag + "beta=" + std::to_string(beta) + " d=" +
               std::to_string(d) + " no monoid\n";
        continue;
      }
      log += tag + "beta=" + std::to_string(beta) + " d=" + std::to_string(d) +
             " monoid found\n";

      try {
        CremonaMap oriented = swap_orientation(cremona_from_monoid(*monoid));
        if (!verify_cremona(oriented, config.verify_trials, cell.next())) {
          log += tag + "map failed the identity check, trying the next cell\n";
          continue;
        }
        ParamSurface after = apply_to_surface(oriented, current);
        log += tag + "map degrees (" + std::to_string(oriented.forward_degree) +
               "," + std::to_string(oriented.inverse_degree) +
               "), image " + surface_brief(after) + "\n";
        return StageRecord{beta,    d,   lam, std::move(*monoid),
                           oriented, after};
      } catch (const std::domain_error& e) {
        log += tag + "map construction failed: " + std::string(e.what()) +
               ", trying the next cell\n";
        continue;
      }
    }
  }
  std::string message =
      "no monoid through the stage " + std::to_string(stage_index) +
      " embedding for beta <= " + std::to_string(config.beta_max) +
      " and d <= " + std::to_string(config.d_max);
  log += tag + "exhausted the search grid\n";
  throw SearchExhausted(message, log);
}

// Folds the stage maps into one symbolic pair while the unreduced degree
// stays affordable; the evaluation-based checks downstream never need it.
std::optional<CremonaMap> materialize_composite(
    const std::vector<StageRecord>& stages, const RectifyConfig& config,
    Rng& rng, std::string& log) {
  long fdeg = 1, ideg = 1;
  for (const StageRecord& st : stages) {
    fdeg *= st.map.forward_degree > 0 ? st.map.forward_degree : 1;
    ideg *= st.map.inverse_degree > 0 ? st.map.inverse_degree : 1;
  }
  if (fdeg > 32 || ideg > 32) {
    log += "  composite kept as the stage chain (symbolic degree " +
           std::to_string(fdeg) + ")\n";
    return std::nullopt;
  }
  try {
    std::vector<MultiPoly> fwd = stages.front().map.forward.components;
    for (std::size_t k = 1; k < stages.size(); ++k) {
      std::vector<MultiPoly> next;
      for (const MultiPoly& c : stages[k].map.forward.components)
        next.push_back(compose(c, fwd));
      fwd = std::move(next);
    }
    std::vector<MultiPoly> inv = stages.back().map.inverse.components;
    for (std::size_t k = stages.size(); k-- > 1;) {
      std::vector<MultiPoly> next;
      for (const MultiPoly& c : stages[k - 1].map.inverse.components)
        next.push_back(compose(c, inv));
      inv = std::move(next);
    }
    CremonaMap composite{make_rational_map(std::move(fwd)),
                         make_rational_map(std::move(inv)),
                         stages.front().monoid, static_cast<int>(fdeg),
                         static_cast<int>(ideg)};
    if (!verify_cremona(composite, config.verify_trials, rng.next())) {
      log += "  composite failed the identity check; kept the stage chain\n";
      return std::nullopt;
    }
    return composite;
  } catch (const std::exception& e) {
    log += "  composite not materialized: " + std::string(e.what()) + "\n";
    return std::nullopt;
  }
}

StepRecord run_step_once(const ParamSurface& s, const RectifyConfig& config,
                         Rng& rng, std::string log) {
  const int a = s.ruling_degree();
  Rng section_rng = rng.fork("section");
  BiForm gamma = section_for_step(s, config.lambda_height, section_rng);

  std::vector<StageRecord> stages;
  Rng stage_rng = rng.fork("stage", 0);
  stages.push_back(run_stage(s, 0, gamma, config, stage_rng, log));

  bool shortcut = stages.back().after.ruling_degree() == a - 1;
  if (!shortcut) {
    if (stages.back().after.ruling_degree() != a)
      throw std::domain_error("projection changed the fiber degree by more than one");
    if (!config.four_projection)
      throw std::domain_error(
          "the section is not a common factor after one projection");
    log += "  projection kept the fiber degree; consuming the remaining "
           "coordinates\n";
    for (int k = 1; k <= 3; ++k) {
      Rng krng = rng.fork("stage", static_cast<std::uint64_t>(k));
      stages.push_back(
          run_stage(stages.back().after, k, gamma, config, krng, log));
      int ruling = stages.back().after.ruling_degree();
      if (k < 3 ? ruling != a : ruling != a - 1)
        throw std::domain_error(
            "the section did not come free where the schedule strips it");
    }
  } else {
    log += "  common factor stripped after one projection\n";
  }

  Rng crng = rng.fork("composite");
  std::optional<CremonaMap> composite =
      materialize_composite(stages, config, crng, log);
  ParamSurface result = stages.back().after;
  return StepRecord{std::move(stages), shortcut, std::move(composite),
                    std::move(result), std::move(log)};
}

std::vector<Rational> eval_forms(const std::vector<BiForm>& forms,
                                 const Rational& s, const Rational& t,
                                 const Rational& u, const Rational& v) {
  std::vector<Rational> p;
  for (const BiForm& f : forms) p.push_back(f.eval(s, t, u, v));
  return p;
}

bool all_zero(const std::vector<Rational>& p) {
  for (const Rational& q : p)
    if (q != Rational(0)) return false;
  return true;
}

// Chases random parameter points through every stage map and compares with
// the final parametrization at the same parameters. Exact: the stage maps
// send one parametrization to the next up to a scalar form.
void check_endpoint(const ParamSurface& initial,
                    const std::vector<StepRecord>& steps,
                    const ParamSurface& final_surface,
                    const RectifyConfig& config, Rng rng) {
  int good = 0;
  const int budget = 40 * config.consistency_points;
  for (int attempt = 0; attempt < budget && good < config.consistency_points;
       ++attempt) {
    Rational s = rng.rational(50), t = rng.rational(50);
    Rational u = rng.rational(50), v = rng.rational(50);
    if ((s == Rational(0) && t == Rational(0)) ||
        (u == Rational(0) && v == Rational(0)))
      continue;
    std::vector<Rational> p = eval_forms(initial.forms(), s, t, u, v);
    if (all_zero(p)) continue;
    bool dead = false;
    for (const StepRecord& step : steps) {
      for (const StageRecord& st : step.stages) {
        p = eval_map(st.map.forward, p);
        if (all_zero(p)) {
          dead = true;
          break;
        }
      }
      if (dead) break;
    }
    if (dead) continue;
    std::vector<Rational> q = eval_forms(final_surface.forms(), s, t, u, v);
    if (all_zero(q)) continue;
    if (!projectively_equal(p, q))
      throw std::runtime_error(
          "endpoint consistency failed at a random parameter point");
    ++good;
  }
  if (good < config.consistency_points)
    throw std::runtime_error(
        "could not collect enough clean endpoint samples");
}

}  // namespace

namespace {

void validate_realization(const ParamSurface& s, Rng& checks) {
  if (image_degree(s, checks) < 2)
    throw std::invalid_argument("the image must have degree at least 2");
  if (!is_birational(s, checks))
    throw std::invalid_argument("the realization must be birational");
}

bool same_forms(const ParamSurface& a, const ParamSurface& b) {
  if (a.forms().size() != b.forms().size()) return false;
  for (std::size_t i = 0; i < a.forms().size(); ++i)
    if (!(a.forms()[i].to_string() == b.forms()[i].to_string())) return false;
  return true;
}

}  // namespace

ParamSurface normalize_position(const ParamSurface& s, Rng& rng) {
  if (s.ambient_dim() != 3)
    throw std::invalid_argument("normalization expects a surface in P3");
  Rng checks = rng.fork("checks");
  validate_realization(s, checks);

  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<BiForm> moved;
    if (attempt == 0) {
      moved = s.forms();
    } else {
      Rng draw = rng.fork("matrix", static_cast<std::uint64_t>(attempt));
      QMat mat(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              Rational(draw.integer_in(-9, 9));
      if (mat.det() == Rational(0)) continue;
      for (int i = 0; i < 4; ++i) {
        BiForm row(s.forms()[0].deg_st(), s.forms()[0].deg_uv());
        for (int j = 0; j < 4; ++j)
          row = row + s.forms()[static_cast<std::size_t>(j)].scaled(
                          mat.at(static_cast<std::size_t>(i),
                                 static_cast<std::size_t>(j)));
        moved.push_back(row);
      }
    }
    try {
      ParamSurface candidate = make_surface(moved);
      if (!point_on_image(candidate, 0, checks)) return candidate;
    } catch (const std::invalid_argument&) {
      continue;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  throw std::runtime_error(
      "no change of coordinates moved the vertex off the image");
}

StepRecord rectify_step(const ParamSurface& s, const RectifyConfig& config,
                        Rng& rng) {
  if (s.ambient_dim() != 3)
    throw std::invalid_argument("the step expects a surface in P3");
  if (s.ruling_degree() < 2)
    throw std::invalid_argument("fibers already map to lines");

  std::string failures;
  for (int attempt = 0; attempt < config.step_retries; ++attempt) {
    Rng att = rng.fork("attempt", static_cast<std::uint64_t>(attempt));
    std::string log =
        "  attempt " + std::to_string(attempt) + " on " + surface_brief(s) +
        "\n";
    try {
      return run_step_once(s, config, att, std::move(log));
    } catch (const SearchExhausted&) {
      throw;  // the grid does not depend on the draws
    } catch (const std::exception& e) {
      failures += "  attempt " + std::to_string(attempt) +
                  " failed: " + e.what() + "\n";
    }
  }
  throw std::runtime_error("the step kept failing over " +
                           std::to_string(config.step_retries) +
                           " redraws:\n" + failures);
}

RectificationTrace rectify(const ParamSurface& s, const RectifyConfig& config) {
  if (s.ambient_dim() != 3)
    throw std::invalid_argument("rectification expects a surface in P3");
  if (s.ruling_degree() == 1)
    return RectificationTrace{s, {}, s, config.seed,
                              "the fibers already map to lines\n"};

  Rng root(config.seed);
  {
    Rng checks = root.fork("input-checks");
    validate_realization(s, checks);
  }

  // The given position is tried first: a coordinate point lying on the image
  // is exactly the alignment the one-projection shortcut feeds on, and any
  // move would destroy it. Normalization is the fallback when the first step
  // finds no monoid where it started.
  ParamSurface initial = s;
  std::string log = "input: " + surface_brief(initial) + "\n";
  bool renormalized = false;

  std::vector<StepRecord> steps;
  ParamSurface current = initial;
  int index = 0;
  while (current.ruling_degree() > 1) {
    log += "step " + std::to_string(index) + "\n";
    Rng srng = root.fork(renormalized ? "moved-step" : "step",
                         static_cast<std::uint64_t>(index));
    try {
      auto started = std::chrono::steady_clock::now();
      StepRecord record = rectify_step(current, config, srng);
      if (config.step_observer) {
        std::chrono::duration<double, std::milli> took =
            std::chrono::steady_clock::now() - started;
        config.step_observer(record, took.count());
      }
      log += record.log;
      current = record.result;
      steps.push_back(std::move(record));
      ++index;
    } catch (const SearchExhausted& e) {
      if (index == 0 && !renormalized) {
        Rng norm = root.fork("normalize");
        ParamSurface moved = normalize_position(current, norm);
        if (!same_forms(moved, current)) {
          renormalized = true;
          log += e.log();
          log += "no monoid at the given position; retrying from a moved one\n";
          log += "normalized input: " + surface_brief(moved) + "\n";
          initial = moved;
          current = moved;
          continue;
        }
      }
      throw SearchExhausted(e.what(), log + e.log());
    }
  }

  check_endpoint(initial, steps, current, config, root.fork("endpoint"));
  log += "endpoint agreement at " + std::to_string(config.consistency_points) +
         " parameter points\n";
  return RectificationTrace{std::move(initial), std::move(steps),
                            std::move(current), config.seed, std::move(log)};
}

}  // namespace cremona
