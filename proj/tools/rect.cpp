// Command line front end: dimension counts, monoid search, Cremona map
// construction and application, rectification runs, inequality certificates
// and a small orbit demo. All randomness is seeded; the RECT_SEED
// environment variable overrides any --seed. JSON goes to stdout (and
// --output when given) and is byte-identical across reruns with the same
// inputs; wall-clock timings go to stderr.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/bounds.hpp"
#include "cremona/jsonio.hpp"
#include "cremona/lambda.hpp"
#include "cremona/maps.hpp"
#include "cremona/monoid.hpp"
#include "cremona/rectify.hpp"
#include "cremona/surface.hpp"

using namespace cremona;
using Json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    std::chrono::duration<double, std::milli> d =
        std::chrono::steady_clock::now() - start_;
    return d.count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("RECT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("RECT_SEED is not an unsigned integer");
    }
  }
  return cli_seed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& doc, const std::string& output) {
  std::cout << doc << "\n";
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write " + output);
    out << doc << "\n";
  }
}

std::vector<int> parse_vertexes(const std::string& text) {
  if (text == "p0") return {0};
  if (text == "p4") return {4};
  if (text == "p0,p4" || text == "p4,p0") return {0, 4};
  throw std::invalid_argument("vertexes must be p0, p4 or p0,p4");
}

// The surface the monoid search runs on: P4 realizations pass through,
// P3 surfaces are re-embedded with the requested fiber count first.
ParamSurface embedded_input(const ParamSurface& s, int beta, Rng& rng) {
  if (s.ambient_dim() == 4) return s;
  if (s.ambient_dim() != 3)
    throw std::invalid_argument("expected a surface in P3 or P4");
  if (s.ruling_degree() < 2)
    throw std::invalid_argument(
        "a scroll has no re-embedding; pass a surface with ruling degree >= 2");
  Rng lrng = rng.fork("lambda");
  return build_lambda_M(s, beta, lrng).result;
}

struct FoundMonoid {
  Monoid monoid;
  int system_dim = -1;
};

std::optional<FoundMonoid> search_monoid(const ParamSurface& Z, int d_lo,
                                         int d_hi, Rng& rng) {
  for (int d = d_lo; d <= d_hi; ++d) {
    Stopwatch watch;
    Rng drng = rng.fork("monoid", static_cast<std::uint64_t>(d));
    std::optional<Monoid> m = find_double_vertex_monoid(Z, d, drng);
    std::cerr << "## d=" << d << ": " << (m ? "found" : "none") << " ("
              << watch.ms() << " ms)\n";
    if (!m) continue;
    int dim = -1;
    try {
      dim = restrict_to_surface(monoid_basis(d, {0, 4}), Z).dim();
    } catch (const std::domain_error&) {
    }
    return FoundMonoid{std::move(*m), dim};
  }
  return std::nullopt;
}

int cmd_monoid_dim(int d, const std::string& vertexes, const std::string& output) {
  std::vector<int> verts = parse_vertexes(vertexes);
  MonoidSystem sys = monoid_basis(d, verts);
  long formula = verts.size() == 2 ? dim_formula_Mdpq(d) : dim_formula_Md(d);
  Json j;
  j["schema"] = kSchemaVersion;
  j["d"] = d;
  Json names = Json::array();
  for (int v : verts) names.push_back("p" + std::to_string(v));
  j["vertexes"] = std::move(names);
  j["enumerated"] = sys.dim();
  j["formula"] = formula;
  j["match"] = (sys.dim() == formula);
  emit(j.dump(2), output);
  return sys.dim() == formula ? 0 : 4;
}

int cmd_find_monoid(const std::string& surface_path, int d, int d_max, int beta,
                    std::uint64_t seed, const std::string& output) {
  ParamSurface s = surface_from_json(read_file(surface_path));
  Rng root(effective_seed(seed));
  ParamSurface Z = embedded_input(s, beta, root);
  int lo = d > 0 ? d : 2;
  int hi = d > 0 ? d : d_max;
  std::optional<FoundMonoid> found = search_monoid(Z, lo, hi, root);
  if (!found) {
    emit("null", output);
    std::cerr << "no double vertex monoid through the image for d <= " << hi
              << "\n";
    return 3;
  }
  emit(monoid_to_json(found->monoid, found->system_dim, true), output);
  return 0;
}

int cmd_cremona_build(const std::string& monoid_text,
                      const std::string& surface_path, int d, int d_max,
                      int beta, int trials, std::uint64_t seed,
                      const std::string& output) {
  std::uint64_t sd = effective_seed(seed);
  Monoid mo;
  if (!monoid_text.empty()) {
    mo = make_monoid(MultiPoly::parse(monoid_text, 5), {0, 4});
  } else if (!surface_path.empty()) {
    ParamSurface s = surface_from_json(read_file(surface_path));
    Rng root(sd);
    ParamSurface Z = embedded_input(s, beta, root);
    int lo = d > 0 ? d : 2;
    int hi = d > 0 ? d : d_max;
    std::optional<FoundMonoid> found = search_monoid(Z, lo, hi, root);
    if (!found) {
      std::cerr << "no double vertex monoid through the image for d <= " << hi
                << "\n";
      return 3;
    }
    mo = std::move(found->monoid);
  } else {
    throw std::invalid_argument("pass --monoid or --surface");
  }
  CremonaMap map = cremona_from_monoid(mo);
  if (!verify_cremona(map, trials, sd))
    throw std::runtime_error("the composed map failed the identity check");
  emit(map_to_json(map), output);
  return 0;
}

int cmd_cremona_verify(const std::string& map_path, int trials,
                       std::uint64_t seed, const std::string& output) {
  CremonaMap m = map_from_json(read_file(map_path));
  Stopwatch watch;
  bool ok = verify_cremona(m, trials, effective_seed(seed));
  std::cerr << "## verify: " << trials << " trials (" << watch.ms() << " ms)\n";
  Json j;
  j["schema"] = kSchemaVersion;
  j["verified"] = ok;
  j["trials"] = trials;
  emit(j.dump(2), output);
  return ok ? 0 : 4;
}

int cmd_cremona_apply(const std::string& map_path,
                      const std::string& surface_path, std::uint64_t seed,
                      const std::string& output) {
  CremonaMap m = map_from_json(read_file(map_path));
  ParamSurface s = surface_from_json(read_file(surface_path));
  ParamSurface image = apply_to_surface(m, s);
  emit(surface_to_json(image, effective_seed(seed)), output);
  return 0;
}

int cmd_rectify(const std::string& surface_path, std::uint64_t seed,
                int beta_max, int d_max, bool four_projection,
                const std::string& output) {
  ParamSurface s = surface_from_json(read_file(surface_path));
  RectifyConfig cfg;
  cfg.seed = effective_seed(seed);
  cfg.beta_max = beta_max;
  cfg.d_max = d_max;
  cfg.four_projection = four_projection;
  int step_index = 0;
  cfg.step_observer = [&step_index](const StepRecord& step, double ms) {
    for (const StageRecord& st : step.stages) {
      Rng reporter(0);
      std::cerr << "## step " << step_index << ": beta=" << st.beta
                << " d=" << st.d << " map degree " << st.map.forward_degree
                << ", surface bidegree (" << st.after.ruling_degree() << ","
                << st.after.section_degree() << ") degree "
                << image_degree(st.after, reporter) << "\n";
    }
    std::cerr << "## step " << step_index << ": " << ms << " ms\n";
    ++step_index;
  };
  Stopwatch watch;
  RectificationTrace trace = rectify(s, cfg);
  std::cerr << "## rectify: " << trace.steps.size() << " steps ("
            << watch.ms() << " ms)\n";
  emit(trace_to_json(trace), output);
  return 0;
}

struct GridRange {
  long a_lo, a_hi, b_lo, b_hi;
};

GridRange parse_grid(const std::string& text) {
  GridRange g{};
  char tail = 0;
  if (std::sscanf(text.c_str(), "a=%ld..%ld,b=%ld..%ld%c", &g.a_lo, &g.a_hi,
                  &g.b_lo, &g.b_hi, &tail) != 4 ||
      g.a_lo < 2 || g.a_hi < g.a_lo || g.b_lo < 1 || g.b_hi < g.b_lo)
    throw std::invalid_argument("grid must look like a=2..6,b=1..6");
  return g;
}

int cmd_verify_lemmas(bool constants, const std::string& grid, int precision,
                      bool as_json, const std::string& output) {
  if (precision < 15 || precision > 200)
    throw std::invalid_argument("precision must lie in [15, 200]");
  int digits = precision + 15 < 30 ? 30 : precision + 15;

  if (constants) {
    Real xi = xi_constant(digits);
    auto [a1, a2] = positivity_roots(digits);
    if (as_json) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["digits"] = precision;
      j["xi"] = xi.str(precision);
      j["a1"] = a1.str(precision);
      j["a2"] = a2.str(precision);
      emit(j.dump(2), output);
    } else {
      std::ostringstream out;
      out << "xi = " << xi.str(precision) << "\n"
          << "a1 = " << a1.str(precision) << "\n"
          << "a2 = " << a2.str(precision);
      emit(out.str(), output);
    }
    return 0;
  }

  if (grid.empty())
    throw std::invalid_argument("pass --constants or --grid a=2..6,b=1..6");
  GridRange g = parse_grid(grid);
  Json rows = Json::array();
  bool all_ok = true;
  bool exhausted = false;
  Stopwatch watch;
  for (long a = g.a_lo; a <= g.a_hi; ++a)
    for (long b = g.b_lo; b <= g.b_hi; ++b) {
      std::optional<long> h = dimension_threshold(a, b, 512, digits);
      Json row;
      row["a"] = a;
      row["b"] = b;
      if (!h) {
        row["h_star"] = nullptr;
        exhausted = true;
        rows.push_back(std::move(row));
        continue;
      }
      long d = a * *h;
      long beta = beta_of(d, a, digits).beta;
      BoundReport quad = check_quadratic_inequality(a, b, beta, d);
      BoundReport dim = check_dimension_inequality(a, b, beta, d);
      row["h_star"] = *h;
      row["d"] = d;
      row["beta"] = beta;
      row["quadratic_margin"] = to_string(quad.margin);
      row["dimension_margin"] = to_string(dim.margin);
      row["ok"] = quad.verdict && dim.verdict;
      all_ok = all_ok && quad.verdict && dim.verdict;
      rows.push_back(std::move(row));
    }
  std::cerr << "## grid: " << rows.size() << " pairs (" << watch.ms()
            << " ms)\n";

  if (as_json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["precision"] = precision;
    j["rows"] = std::move(rows);
    emit(j.dump(2), output);
  } else {
    std::ostringstream out;
    out << "a  b  h*  d   beta  quadratic_margin  dimension_margin  ok";
    for (const Json& row : rows) {
      out << "\n"
          << row["a"] << "  " << row["b"] << "  ";
      if (row["h_star"].is_null()) {
        out << "not found within h <= 512";
        continue;
      }
      out << row["h_star"] << "   " << row["d"] << "   " << row["beta"]
          << "     " << row["quadratic_margin"].get<std::string>() << "  "
          << row["dimension_margin"].get<std::string>() << "  "
          << (row["ok"].get<bool>() ? "yes" : "NO");
    }
    emit(out.str(), output);
  }
  if (exhausted) return 3;
  return all_ok ? 0 : 4;
}

// One orbit link: a random double vertex monoid of degree d whose Cremona
// map is defined on the surface, applied to it.
std::pair<CremonaMap, ParamSurface> random_orbit_link(const ParamSurface& s,
                                                      int d, Rng& rng) {
  MonoidSystem sys = monoid_basis(d, {0, 4});
  for (int attempt = 0; attempt < 48; ++attempt) {
    Rng arng = rng.fork("attempt", static_cast<std::uint64_t>(attempt));
    MultiPoly f = MultiPoly::zero(5);
    for (const MultiPoly& basis_form : sys.basis)
      f = f + basis_form.scaled(arng.rational(9));
    try {
      Monoid mo = make_monoid(f, {0, 4});
      CremonaMap map = cremona_from_monoid(mo);
      if (!verify_cremona(map, 20, arng.next())) continue;
      ParamSurface after = apply_to_surface(map, s);
      return {std::move(map), std::move(after)};
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("no draw gave a monoid map defined on the surface");
}

int cmd_demo_orbit(const std::string& surface_path, int d1, int d2,
                   std::uint64_t seed, bool rerectify, int beta_max, int d_max,
                   const std::string& output) {
  ParamSurface scroll = surface_from_json(read_file(surface_path));
  if (scroll.ambient_dim() != 3 || scroll.ruling_degree() != 1)
    throw std::invalid_argument("demo-orbit expects a scroll in P3");
  std::uint64_t sd = effective_seed(seed);
  Rng root(sd);

  Json j;
  j["schema"] = kSchemaVersion;
  j["seed"] = sd;
  j["initial"] = Json::parse(surface_to_json(scroll, sd));
  Json chain = Json::array();
  ParamSurface current = scroll;
  std::vector<int> degrees = {d1, d2};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    int d = degrees[i];
    if (d < 1) throw std::invalid_argument("link degrees must be positive");
    Json link;
    link["d"] = d;
    if (d == 1) {
      link["map"] = nullptr;
    } else {
      Stopwatch watch;
      Rng lrng = root.fork("link", i);
      auto [map, after] = random_orbit_link(current, d, lrng);
      std::cerr << "## link " << i << ": d=" << d << " (" << watch.ms()
                << " ms)\n";
      link["map"] = Json::parse(map_to_json(map));
      current = after;
    }
    link["ruling_degree"] = current.ruling_degree();
    link["after"] = Json::parse(surface_to_json(current, sd));
    chain.push_back(std::move(link));
  }
  j["chain"] = std::move(chain);

  if (rerectify && current.ruling_degree() > 1) {
    RectifyConfig cfg;
    cfg.seed = sd;
    cfg.beta_max = beta_max;
    cfg.d_max = d_max;
    Json r;
    try {
      Stopwatch watch;
      RectificationTrace trace = rectify(current, cfg);
      std::cerr << "## rectify: " << trace.steps.size() << " steps ("
                << watch.ms() << " ms)\n";
      r["outcome"] = "scroll";
      r["steps"] = trace.steps.size();
      r["final"] = Json::parse(surface_to_json(trace.final_surface, sd));
    } catch (const SearchExhausted& e) {
      r["outcome"] = "search-bounded";
      r["detail"] = e.what();
    }
    j["rectify"] = std::move(r);
  } else {
    j["rectify"] = nullptr;
  }
  emit(j.dump(2), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cremona toolkit: monoid systems, birational maps and rectification "
      "of ruled surfaces. RECT_SEED overrides any --seed."};
  app.require_subcommand(1);

  // monoid-dim
  int md_d = 0;
  std::string md_vertexes = "p0";
  std::string md_output;
  CLI::App* md = app.add_subcommand(
      "monoid-dim", "Enumerated against closed-form system dimensions");
  md->add_option("--d", md_d, "form degree, at least 2")->required();
  md->add_option("--vertexes", md_vertexes, "p0, p4 or p0,p4");
  md->add_option("--output", md_output, "also write the JSON here");

  // find-monoid
  std::string fm_surface, fm_output;
  int fm_d = 0, fm_d_max = 8, fm_beta = 1;
  std::uint64_t fm_seed = 1;
  CLI::App* fm = app.add_subcommand(
      "find-monoid", "Search a double vertex monoid through a surface");
  fm->add_option("--surface", fm_surface, "surface descriptor JSON")
      ->required();
  fm->add_option("--d", fm_d, "check a single degree");
  fm->add_option("--d-max", fm_d_max, "ascending search bound");
  fm->add_option("--beta", fm_beta, "fiber count when re-embedding from P3");
  fm->add_option("--seed", fm_seed, "draw seed");
  fm->add_option("--output", fm_output, "also write the JSON here");

  // cremona build/verify/apply
  CLI::App* cre = app.add_subcommand("cremona", "Build, verify or apply maps");
  cre->require_subcommand(1);
  std::string cb_monoid, cb_surface, cb_output;
  int cb_d = 0, cb_d_max = 8, cb_beta = 1, cb_trials = 100;
  std::uint64_t cb_seed = 1;
  CLI::App* cb = cre->add_subcommand("build", "Map from a monoid or a search");
  cb->add_option("--monoid", cb_monoid, "monoid form in x0..x4");
  cb->add_option("--surface", cb_surface, "search through this surface");
  cb->add_option("--d", cb_d, "single degree to search");
  cb->add_option("--d-max", cb_d_max, "ascending search bound");
  cb->add_option("--beta", cb_beta, "fiber count when re-embedding from P3");
  cb->add_option("--trials", cb_trials, "identity checks on the result");
  cb->add_option("--seed", cb_seed, "draw seed");
  cb->add_option("--output", cb_output, "also write the JSON here");

  std::string cv_map, cv_output;
  int cv_trials = 100;
  std::uint64_t cv_seed = 1;
  CLI::App* cv = cre->add_subcommand("verify", "Identity check at random points");
  cv->add_option("--map", cv_map, "map descriptor JSON")->required();
  cv->add_option("--trials", cv_trials, "number of points");
  cv->add_option("--seed", cv_seed, "draw seed");
  cv->add_option("--output", cv_output, "also write the JSON here");

  std::string ca_map, ca_surface, ca_output;
  std::uint64_t ca_seed = 1;
  CLI::App* ca = cre->add_subcommand("apply", "Image of a surface under a map");
  ca->add_option("--map", ca_map, "map descriptor JSON")->required();
  ca->add_option("--surface", ca_surface, "surface descriptor JSON")
      ->required();
  ca->add_option("--seed", ca_seed, "seed recorded in the output");
  ca->add_option("--output", ca_output, "also write the JSON here");

  // rectify
  std::string rc_surface, rc_output;
  std::uint64_t rc_seed = 1;
  int rc_beta_max = 4, rc_d_max = 8;
  bool rc_four = true;
  CLI::App* rc = app.add_subcommand(
      "rectify", "Lower the ruling degree to 1 by monoid projections");
  rc->add_option("--surface", rc_surface, "surface descriptor JSON")
      ->required();
  rc->add_option("--seed", rc_seed, "run seed");
  rc->add_option("--beta-max", rc_beta_max, "fiber counts searched per stage");
  rc->add_option("--d-max", rc_d_max, "monoid degrees searched per fiber count");
  rc->add_flag("--four-projection,!--single-projection", rc_four,
               "fall back to the four projection schedule (default on)");
  rc->add_option("--output", rc_output, "also write the JSON here");

  // verify-lemmas
  bool vl_constants = false, vl_json = false;
  std::string vl_grid, vl_output;
  int vl_precision = 50;
  CLI::App* vl = app.add_subcommand(
      "verify-lemmas", "Certify the dimension count inequalities");
  vl->add_flag("--constants", vl_constants,
               "print the growth constant and the positivity roots");
  vl->add_option("--grid", vl_grid, "ranges like a=2..6,b=1..6");
  vl->add_option("--precision", vl_precision, "printed digits (default 50)");
  vl->add_flag("--json", vl_json, "emit JSON instead of text");
  vl->add_option("--output", vl_output, "also write the result here");

  // demo-orbit
  std::string do_surface, do_output;
  int do_d1 = 2, do_d2 = 2, do_beta_max = 2, do_d_max = 5;
  std::uint64_t do_seed = 1;
  bool do_rectify = false;
  CLI::App* dm = app.add_subcommand(
      "demo-orbit", "Push a scroll around by random monoid maps");
  dm->add_option("--surface", do_surface, "scroll descriptor JSON")
      ->required();
  dm->add_option("--d1", do_d1, "degree of the first link (1 = identity)");
  dm->add_option("--d2", do_d2, "degree of the second link (1 = identity)");
  dm->add_option("--seed", do_seed, "draw seed");
  dm->add_flag("--rectify", do_rectify, "try to rectify the orbit endpoint");
  dm->add_option("--beta-max", do_beta_max, "rectify search bound");
  dm->add_option("--d-max", do_d_max, "rectify search bound");
  dm->add_option("--output", do_output, "also write the JSON here");

  try {
    app.parse(argc, argv);
    if (md->parsed()) return cmd_monoid_dim(md_d, md_vertexes, md_output);
    if (fm->parsed())
      return cmd_find_monoid(fm_surface, fm_d, fm_d_max, fm_beta, fm_seed,
                             fm_output);
    if (cre->parsed()) {
      if (cb->parsed())
        return cmd_cremona_build(cb_monoid, cb_surface, cb_d, cb_d_max,
                                 cb_beta, cb_trials, cb_seed, cb_output);
      if (cv->parsed())
        return cmd_cremona_verify(cv_map, cv_trials, cv_seed, cv_output);
      if (ca->parsed())
        return cmd_cremona_apply(ca_map, ca_surface, ca_seed, ca_output);
    }
    if (rc->parsed())
      return cmd_rectify(rc_surface, rc_seed, rc_beta_max, rc_d_max, rc_four,
                         rc_output);
    if (vl->parsed())
      return cmd_verify_lemmas(vl_constants, vl_grid, vl_precision, vl_json,
                               vl_output);
    if (dm->parsed())
      return cmd_demo_orbit(do_surface, do_d1, do_d2, do_seed, do_rectify,
                            do_beta_max, do_d_max, do_output);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n" << e.log();
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
