#include "emf/corpus.hpp"

#include "emf/parser.hpp"

namespace emf {

namespace {

struct Builder {
  ProblemInstance inst;

  Builder(unsigned order, std::vector<std::string> vars, const std::string& potential) {
    inst.field_order = order;
    inst.field = std::make_shared<const CyclotomicField>(order);
    inst.variables = std::move(vars);
    inst.ring = std::make_shared<const PolyRing>(inst.field, inst.variables);
    inst.f = parse_poly(potential, inst.ring);
  }

  Poly p(const std::string& text) const { return parse_poly(text, inst.ring); }

  void generator(const std::vector<std::vector<std::string>>& rows) {
    size_t n = rows.size();
    ScalarMatrix m(n, n, inst.field);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = parse_scalar(rows[i][j], inst.field);
    inst.generators.push_back(std::move(m));
  }

  // Diagonal equivariance matrix from scalar strings, one per generator.
  std::vector<ScalarMatrix> diag_rep(const std::vector<std::vector<std::string>>& per_gen) const {
    std::vector<ScalarMatrix> out;
    for (const auto& diag : per_gen) {
      ScalarMatrix m(diag.size(), diag.size(), inst.field);
      for (size_t i = 0; i < diag.size(); ++i) m.at(i, i) = parse_scalar(diag[i], inst.field);
      out.push_back(std::move(m));
    }
    return out;
  }

  void object(const std::string& label, PolyMatrix A, PolyMatrix B,
              std::vector<ScalarMatrix> rho0 = {}, std::vector<ScalarMatrix> rho1 = {}) {
    ProblemInstance::Object o;
    o.label = label;
    o.A = std::move(A);
    o.B = std::move(B);
    o.rho0 = std::move(rho0);
    o.rho1 = std::move(rho1);
    inst.objects.push_back(std::move(o));
  }
};

// Koszul factorization of u1 v1 + u2 v2.
PolyMatrix koszul_a(const Poly& u1, const Poly& v1, const Poly& u2, const Poly& v2) {
  return {{u1, u2}, {v2, -v1}};
}
PolyMatrix koszul_b(const Poly& u1, const Poly& v1, const Poly& u2, const Poly& v2) {
  return {{v1, u2}, {v2, -u1}};
}

ProblemInstance spinor() {
  Builder b(2, {"x"}, "x^2");
  b.generator({{"-1"}});
  b.object("spinor", {{b.p("x")}}, {{b.p("x")}}, b.diag_rep({{"1"}}), b.diag_rep({{"-1"}}));
  return b.inst;
}

ProblemInstance quadric2() {
  Builder b(4, {"x", "y"}, "x^2 + y^2");
  b.object("branch+", {{b.p("x + z*y")}}, {{b.p("x - z*y")}});
  b.object("branch-", {{b.p("x - z*y")}}, {{b.p("x + z*y")}});
  return b.inst;
}

ProblemInstance quadric4() {
  Builder b(4, {"x1", "x2", "x3", "x4"}, "x1^2 + x2^2 + x3^2 + x4^2");
  b.generator({{"1", "0", "0", "0"},
               {"0", "1", "0", "0"},
               {"0", "0", "-1", "0"},
               {"0", "0", "0", "-1"}});
  Poly u = b.p("x1 + z*x2"), v = b.p("x1 - z*x2");
  Poly s = b.p("x3 + z*x4"), t = b.p("x3 - z*x4");
  // Product of the 1x1 branches (u, v) and (s, t); the second factor
  // anti-commutes with the generator, so both halves carry diag(1, -1).
  auto rho = b.diag_rep({{"1", "-1"}});
  b.object("product++", {{u, s}, {-t, v}}, {{v, -s}, {t, u}}, rho, rho);
  b.object("product+-", {{u, t}, {-s, v}}, {{v, -t}, {s, u}}, rho, rho);
  return b.inst;
}

ProblemInstance an_suspended(unsigned n, unsigned a, const std::string& group) {
  if (n < 1 || a < 1 || a > n)
    throw validation_error("an_suspended: need 1 <= a <= n");
  unsigned order = 1;
  if (group == "mu") order = n + 1;
  else if (group == "z2") order = 2;
  else if (group != "trivial")
    throw validation_error("an_suspended: group must be trivial, mu, or z2");

  Builder b(order, {"x", "y"},
            "x^" + std::to_string(n + 1) + " + y^2");
  Poly xa = b.p("x^" + std::to_string(a));
  Poly xb = b.p("x^" + std::to_string(n + 1 - a));
  Poly y = b.p("y");
  PolyMatrix A{{xa, y}, {-y, xb}};
  PolyMatrix B{{xb, -y}, {y, xa}};
  std::vector<ScalarMatrix> rho0, rho1;
  if (group == "mu") {
    b.generator({{"z", "0"}, {"0", "1"}});
    std::string za = "z^" + std::to_string((n + 1 - a) % (n + 1));
    rho0 = b.diag_rep({{"1", za}});
    rho1 = b.diag_rep({{za, "1"}});
  } else if (group == "z2") {
    b.generator({{"1", "0"}, {"0", "-1"}});
    rho0 = b.diag_rep({{"1", "-1"}});
    rho1 = b.diag_rep({{"1", "-1"}});
  }
  b.object("suspended", A, B, rho0, rho1);
  return b.inst;
}

ProblemInstance koszul_family(const std::string& label, const std::string& potential,
                              const std::string& u1, const std::string& v1,
                              const std::string& u2, const std::string& v2) {
  Builder b(1, {"x", "y"}, potential);
  Poly pu1 = b.p(u1), pv1 = b.p(v1), pu2 = b.p(u2), pv2 = b.p(v2);
  b.object(label, koszul_a(pu1, pv1, pu2, pv2), koszul_b(pu1, pv1, pu2, pv2));
  b.object(label + "-flip", koszul_b(pu1, pv1, pu2, pv2), koszul_a(pu1, pv1, pu2, pv2));
  return b.inst;
}

ProblemInstance dk(unsigned k) {
  if (k < 4 || k > 6) throw validation_error("d4: k must be 4, 5, or 6");
  return koszul_family("koszul", "x^" + std::to_string(k - 1) + " + x*y^2", "x",
                       "x^" + std::to_string(k - 2), "x*y", "y");
}

}  // namespace

ProblemInstance generate_corpus(const std::string& family, const Json& params) {
  auto get = [&](const char* key, unsigned def) -> unsigned {
    return params.contains(key) ? params[key].get<unsigned>() : def;
  };
  if (family == "spinor") return spinor();
  if (family == "quadric") {
    unsigned nvars = get("nvars", 2);
    if (nvars == 2) return quadric2();
    if (nvars == 4) return quadric4();
    throw validation_error("quadric: nvars must be 2 or 4");
  }
  if (family == "an_suspended")
    return an_suspended(get("n", 2), get("a", 1),
                        params.contains("group") ? params["group"].get<std::string>()
                                                 : "trivial");
  if (family == "d4") return dk(get("k", 4));
  if (family == "e6") return koszul_family("koszul", "x^3 + y^4", "x", "x^2", "y", "y^3");
  if (family == "e7") return koszul_family("koszul", "x^3 + x*y^3", "x", "x^2", "x*y", "y^2");
  if (family == "e8") return koszul_family("koszul", "x^3 + y^5", "x", "x^2", "y", "y^4");
  throw validation_error("unknown corpus family: " + family);
}

std::vector<std::string> corpus_families() {
  return {"spinor", "quadric", "an_suspended", "d4", "e6", "e7", "e8"};
}

std::vector<std::pair<std::string, ProblemInstance>> default_corpus() {
  std::vector<std::pair<std::string, ProblemInstance>> out;
  out.emplace_back("spinor", generate_corpus("spinor", Json::object()));
  out.emplace_back("node", generate_corpus("quadric", Json{{"nvars", 2}}));
  out.emplace_back("quadric4", generate_corpus("quadric", Json{{"nvars", 4}}));
  out.emplace_back("a2_suspended", generate_corpus("an_suspended", Json::object()));
  out.emplace_back("a3_suspended_mu",
                   generate_corpus("an_suspended", Json{{"n", 3}, {"a", 1}, {"group", "mu"}}));
  out.emplace_back("d4", generate_corpus("d4", Json::object()));
  out.emplace_back("e6", generate_corpus("e6", Json::object()));
  out.emplace_back("e7", generate_corpus("e7", Json::object()));
  out.emplace_back("e8", generate_corpus("e8", Json::object()));
  return out;
}

}  // namespace emf
