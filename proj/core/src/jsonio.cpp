#include "cremona/jsonio.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cremona {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

void check_schema(const Json& j) {
  if (j.contains("schema") && j["schema"] != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version");
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing field: ") + name);
  return *it;
}

Json surface_doc(const ParamSurface& s, std::uint64_t seed) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["bidegree"] = {s.ruling_degree(), s.section_degree()};
  Json forms = Json::array();
  for (const BiForm& f : s.forms()) forms.push_back(f.to_string());
  j["forms"] = std::move(forms);
  j["seed"] = seed;
  return j;
}

ParamSurface surface_from_doc(const Json& j, std::uint64_t* seed_out) {
  const Json& forms = field(j, "forms");
  if (!forms.is_array() || forms.size() < 2)
    throw std::invalid_argument("forms must be an array of at least two strings");
  std::vector<BiForm> parsed;
  for (const Json& f : forms) {
    if (!f.is_string()) throw std::invalid_argument("forms must be strings");
    try {
      parsed.push_back(BiForm::parse(f.get<std::string>()));
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad form: ") + e.what());
    }
  }
  ParamSurface s = make_surface(std::move(parsed));
  if (field(j, "ambient_dim") != s.ambient_dim())
    throw std::invalid_argument("ambient_dim disagrees with the forms");
  const Json& bd = field(j, "bidegree");
  if (!bd.is_array() || bd.size() != 2 || bd[0] != s.ruling_degree() ||
      bd[1] != s.section_degree())
    throw std::invalid_argument("bidegree disagrees with the reduced forms");
  if (seed_out) *seed_out = field(j, "seed").get<std::uint64_t>();
  return s;
}

Json components_doc(const RationalMap& m) {
  Json a = Json::array();
  for (const MultiPoly& c : m.components) a.push_back(c.to_string());
  return a;
}

RationalMap map_from_components(const Json& a, const char* what) {
  if (!a.is_array() || a.size() < 2)
    throw std::invalid_argument(std::string(what) + " must list at least two forms");
  std::vector<MultiPoly> comps;
  for (const Json& c : a) {
    if (!c.is_string()) throw std::invalid_argument("components must be strings");
    try {
      comps.push_back(MultiPoly::parse(c.get<std::string>(), 4));
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad component: ") + e.what());
    }
  }
  return make_rational_map(std::move(comps));
}

Json map_doc(const CremonaMap& m) {
  Json j;
  j["components"] = components_doc(m.forward);
  j["inverse"] = components_doc(m.inverse);
  j["monoid"] = m.source_monoid.form.to_string();
  j["degree"] = m.forward_degree;
  return j;
}

CremonaMap map_from_doc(const Json& j) {
  CremonaMap m;
  m.forward = map_from_components(field(j, "components"), "components");
  m.inverse = map_from_components(field(j, "inverse"), "inverse");
  MultiPoly form;
  try {
    form = MultiPoly::parse(field(j, "monoid").get<std::string>(), 5);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad monoid: ") + e.what());
  }
  m.source_monoid = make_monoid(std::move(form), {0, 4});
  m.forward_degree = m.forward.degree();
  m.inverse_degree = m.inverse.degree();
  if (field(j, "degree") != m.forward_degree)
    throw std::invalid_argument("degree disagrees with the components");
  return m;
}

std::string vertex_name(int v) { return "p" + std::to_string(v); }

int vertex_index(const Json& v) {
  if (v == "p0") return 0;
  if (v == "p4") return 4;
  throw std::invalid_argument("vertexes must be \"p0\" or \"p4\"");
}

}  // namespace

std::string surface_to_json(const ParamSurface& s, std::uint64_t seed) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json doc = surface_doc(s, seed);
  j.update(doc);
  return j.dump(2);
}

ParamSurface surface_from_json(const std::string& text, std::uint64_t* seed_out) {
  Json j = parse_text(text);
  check_schema(j);
  return surface_from_doc(j, seed_out);
}

std::string map_to_json(const CremonaMap& m) {
  Json j;
  j["schema"] = kSchemaVersion;
  j.update(map_doc(m));
  return j.dump(2);
}

CremonaMap map_from_json(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  return map_from_doc(j);
}

std::string monoid_to_json(const Monoid& m, int system_dim, bool cone_free) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["d"] = m.d;
  Json verts = Json::array();
  for (int v : m.vertexes) verts.push_back(vertex_name(v));
  j["vertexes"] = std::move(verts);
  j["dim"] = system_dim;
  j["element"] = m.form.to_string();
  j["cone_free"] = cone_free;
  return j.dump(2);
}

Monoid monoid_from_json(const std::string& text) {
  Json j = parse_text(text);
  check_schema(j);
  std::vector<int> verts;
  for (const Json& v : field(j, "vertexes")) verts.push_back(vertex_index(v));
  MultiPoly form;
  try {
    form = MultiPoly::parse(field(j, "element").get<std::string>(), 5);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad element: ") + e.what());
  }
  Monoid m = make_monoid(std::move(form), std::move(verts));
  if (field(j, "d") != m.d)
    throw std::invalid_argument("d disagrees with the element's degree");
  return m;
}

std::string trace_to_json(const RectificationTrace& t) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["seed"] = t.seed;
  j["initial"] = surface_doc(t.initial, t.seed);
  Json steps = Json::array();
  for (const StepRecord& step : t.steps) {
    Json sj;
    sj["shortcut"] = step.shortcut_succeeded;
    Json stages = Json::array();
    for (const StageRecord& st : step.stages) {
      Json gj;
      gj["beta"] = st.beta;
      gj["d"] = st.d;
      gj["lambda"] = surface_doc(st.lambda.result, t.seed);
      gj["monoid"] = st.monoid.form.to_string();
      gj["map"] = map_doc(st.map);
      gj["after"] = surface_doc(st.after, t.seed);
      stages.push_back(std::move(gj));
    }
    sj["stages"] = std::move(stages);
    sj["map"] = step.map ? map_doc(*step.map) : Json(nullptr);
    sj["result"] = surface_doc(step.result, t.seed);
    sj["log"] = step.log;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  j["final"] = surface_doc(t.final_surface, t.seed);
  j["log"] = t.log;
  return j.dump(2);
}

}  // namespace cremona
