#include "emf/instance.hpp"

#include <fstream>

#include "emf/milnor.hpp"
#include "emf/parser.hpp"

namespace emf {

namespace {

ScalarMatrix parse_matrix(const Json& rows, const FieldPtr& field, const std::string& what) {
  if (!rows.is_array() || rows.empty())
    throw parse_error(what + ": expected a non-empty array of rows");
  size_t nr = rows.size(), nc = rows[0].size();
  ScalarMatrix m(nr, nc, field);
  for (size_t i = 0; i < nr; ++i) {
    if (!rows[i].is_array() || rows[i].size() != nc)
      throw parse_error(what + ": ragged matrix rows");
    for (size_t j = 0; j < nc; ++j)
      m.at(i, j) = parse_scalar(rows[i][j].get<std::string>(), field);
  }
  return m;
}

PolyMatrix parse_poly_matrix(const Json& rows, const RingPtr& ring, const std::string& what) {
  if (!rows.is_array() || rows.empty())
    throw parse_error(what + ": expected a non-empty array of rows");
  size_t nr = rows.size(), nc = rows[0].size();
  PolyMatrix m = pm_zero(nr, nc, ring);
  for (size_t i = 0; i < nr; ++i) {
    if (!rows[i].is_array() || rows[i].size() != nc)
      throw parse_error(what + ": ragged matrix rows");
    for (size_t j = 0; j < nc; ++j) m[i][j] = parse_poly(rows[i][j].get<std::string>(), ring);
  }
  return m;
}

std::vector<ScalarMatrix> parse_rep(const Json& list, const FieldPtr& field, size_t ngens,
                                    const std::string& what) {
  if (!list.is_array() || list.size() != ngens)
    throw parse_error(what + ": expected one matrix per group generator");
  std::vector<ScalarMatrix> out;
  for (size_t i = 0; i < list.size(); ++i)
    out.push_back(parse_matrix(list[i], field, what + "[" + std::to_string(i) + "]"));
  return out;
}

Json matrix_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& p : r) row.push_back(p.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ProblemInstance parse_instance_json(const Json& doc) {
  if (!doc.is_object()) throw parse_error("instance: top level must be an object");
  for (const char* key : {"field", "variables", "potential", "group", "objects"})
    if (!doc.contains(key)) throw parse_error(std::string("instance: missing section '") + key + "'");

  ProblemInstance inst;
  inst.field_order = doc["field"].value("order", 1u);
  if (inst.field_order == 0) throw parse_error("field.order must be positive");
  inst.field = std::make_shared<const CyclotomicField>(inst.field_order);

  for (const auto& v : doc["variables"]) inst.variables.push_back(v.get<std::string>());
  if (inst.variables.empty()) throw parse_error("variables: at least one required");
  for (const auto& v : inst.variables)
    if (v == "z") throw parse_error("variables: 'z' is reserved for the field generator");
  inst.ring = std::make_shared<const PolyRing>(inst.field, inst.variables);

  inst.f = parse_poly(doc["potential"].get<std::string>(), inst.ring);

  const Json& grp = doc["group"];
  if (grp.contains("generators"))
    for (size_t i = 0; i < grp["generators"].size(); ++i)
      inst.generators.push_back(
          parse_matrix(grp["generators"][i], inst.field, "group.generators[" + std::to_string(i) + "]"));

  if (doc.contains("representations"))
    for (const auto& [name, list] : doc["representations"].items())
      inst.representations.emplace(
          name, parse_rep(list, inst.field, inst.generators.size(), "representations." + name));

  for (const auto& obj : doc["objects"]) {
    ProblemInstance::Object o;
    o.label = obj.value("label", std::string("object") + std::to_string(inst.objects.size() + 1));
    o.A = parse_poly_matrix(obj.at("A"), inst.ring, o.label + ".A");
    o.B = parse_poly_matrix(obj.at("B"), inst.ring, o.label + ".B");
    auto read_rho = [&](const char* key) -> std::pair<std::vector<ScalarMatrix>,
                                                      std::optional<std::string>> {
      if (!obj.contains(key)) {
        if (!inst.generators.empty())
          throw parse_error(o.label + ": missing '" + key + "' for a nontrivial group");
        return {{}, std::nullopt};
      }
      if (obj[key].is_string()) {
        std::string name = obj[key].get<std::string>();
        auto it = inst.representations.find(name);
        if (it == inst.representations.end())
          throw parse_error(o.label + "." + key + ": unknown representation '" + name + "'");
        return {it->second, name};
      }
      return {parse_rep(obj[key], inst.field, inst.generators.size(), o.label + "." + key),
              std::nullopt};
    };
    std::tie(o.rho0, o.rho0_ref) = read_rho("rho0");
    std::tie(o.rho1, o.rho1_ref) = read_rho("rho1");
    inst.objects.push_back(std::move(o));
  }
  if (inst.objects.empty()) throw parse_error("objects: at least one required");

  if (doc.contains("options")) {
    const Json& opt = doc["options"];
    if (opt.contains("cutoff") && !opt["cutoff"].is_null())
      inst.cutoff = opt["cutoff"].get<unsigned>();
    inst.precision = opt.value("precision", 128u);
  }
  return inst;
}

ProblemInstance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open instance file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("instance JSON: ") + e.what());
  }
  return parse_instance_json(doc);
}

Json serialize_instance(const ProblemInstance& inst) {
  Json doc;
  doc["field"] = Json{{"order", inst.field_order}};
  doc["variables"] = inst.variables;
  doc["potential"] = inst.f.str();
  Json gens = Json::array();
  for (const auto& g : inst.generators) gens.push_back(matrix_json(g));
  doc["group"] = Json{{"generators", std::move(gens)}};
  if (!inst.representations.empty()) {
    Json reps;
    for (const auto& [name, list] : inst.representations) {
      Json arr = Json::array();
      for (const auto& m : list) arr.push_back(matrix_json(m));
      reps[name] = std::move(arr);
    }
    doc["representations"] = std::move(reps);
  }
  Json objects = Json::array();
  for (const auto& o : inst.objects) {
    Json obj;
    obj["label"] = o.label;
    obj["A"] = poly_matrix_json(o.A);
    obj["B"] = poly_matrix_json(o.B);
    auto rho_json = [&](const std::vector<ScalarMatrix>& rho,
                        const std::optional<std::string>& ref) -> Json {
      if (ref) return *ref;
      Json arr = Json::array();
      for (const auto& m : rho) arr.push_back(matrix_json(m));
      return arr;
    };
    if (!inst.generators.empty() || !o.rho0.empty()) obj["rho0"] = rho_json(o.rho0, o.rho0_ref);
    if (!inst.generators.empty() || !o.rho1.empty()) obj["rho1"] = rho_json(o.rho1, o.rho1_ref);
    objects.push_back(std::move(obj));
  }
  doc["objects"] = std::move(objects);
  Json options;
  options["cutoff"] = inst.cutoff ? Json(*inst.cutoff) : Json(nullptr);
  options["precision"] = inst.precision;
  doc["options"] = std::move(options);
  return doc;
}

bool instances_equal(const ProblemInstance& a, const ProblemInstance& b) {
  auto reps_equal = [](const std::vector<ScalarMatrix>& x, const std::vector<ScalarMatrix>& y) {
    return x == y;
  };
  if (a.field_order != b.field_order || a.variables != b.variables || a.f != b.f) return false;
  if (a.generators != b.generators) return false;
  if (a.representations.size() != b.representations.size()) return false;
  for (auto ia = a.representations.begin(), ib = b.representations.begin();
       ia != a.representations.end(); ++ia, ++ib)
    if (ia->first != ib->first || !reps_equal(ia->second, ib->second)) return false;
  if (a.objects.size() != b.objects.size()) return false;
  for (size_t i = 0; i < a.objects.size(); ++i) {
    const auto& x = a.objects[i];
    const auto& y = b.objects[i];
    if (x.label != y.label || !pm_equal(x.A, y.A) || !pm_equal(x.B, y.B)) return false;
    if (x.rho0 != y.rho0 || x.rho1 != y.rho1) return false;
    if (x.rho0_ref != y.rho0_ref || x.rho1_ref != y.rho1_ref) return false;
  }
  return a.cutoff == b.cutoff && a.precision == b.precision;
}

InstanceContext build_context(const ProblemInstance& inst) {
  GroupAction group(inst.generators, inst.ring);
  group.check_invariance(inst.f);

  // Isolatedness (m-primary Jacobi ideal) is validated by the full Milnor
  // algebra; the identity sector holds it.
  std::vector<Sector> sectors;
  for (size_t g = 0; g < group.size(); ++g) sectors.push_back(make_sector(group, g, inst.f));

  std::vector<EquivariantMF> objects;
  for (const auto& o : inst.objects) {
    EquivariantMF e = make_mf(o.label, o.A, o.B, o.rho0, o.rho1, group);
    auto issues = validate_mf(e, inst.f, group);
    if (!issues.empty()) {
      std::string msg = o.label + ": invalid factorization:";
      for (const auto& s : issues) msg += "\n  " + s;
      throw validation_error(msg);
    }
    objects.push_back(std::move(e));
  }
  return InstanceContext{std::move(group), std::move(sectors), std::move(objects)};
}

}  // namespace emf
