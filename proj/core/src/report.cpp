#include "emf/report.hpp"

namespace emf {

namespace {

Json matrix_strings(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json scalar_json(const Scalar& s) {
  return Json{{"exact", s.str()}, {"approx", s.approx()}};
}

Json vectors_json(const std::vector<std::vector<Scalar>>& vecs) {
  Json out = Json::array();
  for (const auto& v : vecs) {
    Json row = Json::array();
    for (const auto& s : v) row.push_back(s.str());
    out.push_back(std::move(row));
  }
  return out;
}

std::string monomial_str(const RingPtr& ring, const Monomial& m, const FieldPtr& field) {
  return Poly::monomial(ring, m, Scalar::one(field)).str();
}

Json sector_header(const InstanceContext& ctx, size_t g) {
  const Sector& sec = ctx.sectors[g];
  Json out;
  out["element"] = g;
  out["matrix"] = matrix_strings(ctx.group.matrix(g));
  out["fixed_dim"] = sec.locus.fixed_dim;
  out["n_g"] = sec.n_g;
  return out;
}

}  // namespace

Json report_validate(const ProblemInstance& inst, const InstanceContext& ctx) {
  Json out;
  out["command"] = "validate";
  out["valid"] = true;
  out["field_order"] = inst.field_order;
  out["variables"] = inst.variables;
  out["potential"] = inst.f.str();
  out["group_order"] = ctx.group.size();
  out["abelian"] = ctx.group.is_abelian();
  Json objs = Json::array();
  for (const auto& o : ctx.objects)
    objs.push_back(Json{{"label", o.label}, {"rank", o.rank}});
  out["objects"] = std::move(objs);
  // The identity sector's Milnor number doubles as the isolatedness witness.
  out["milnor_number"] = ctx.sectors[0].milnor->mu;
  return out;
}

Json report_milnor(const InstanceContext& ctx) {
  Json out;
  out["command"] = "milnor";
  Json sectors = Json::array();
  for (size_t g = 0; g < ctx.group.size(); ++g) {
    const Sector& sec = ctx.sectors[g];
    Json s = sector_header(ctx, g);
    if (sec.milnor) {
      s["mu"] = sec.milnor->mu;
      Json basis = Json::array();
      for (const auto& m : sec.milnor->basis_monomials)
        basis.push_back(monomial_str(sec.milnor->ring, m, sec.milnor->ring->field));
      s["basis"] = std::move(basis);
    } else {
      s["mu"] = nullptr;
      s["basis"] = Json::array();
    }
    sectors.push_back(std::move(s));
  }
  out["sectors"] = std::move(sectors);
  return out;
}

Json report_residue(const InstanceContext& ctx) {
  Json out;
  out["command"] = "residue";
  Json sectors = Json::array();
  for (size_t g = 0; g < ctx.group.size(); ++g) {
    const Sector& sec = ctx.sectors[g];
    if (!sec.residue) continue;
    Json s = sector_header(ctx, g);
    const FieldPtr& field = sec.milnor->ring->field;
    Scalar res_h = sec.residue->residue(sec.milnor->hessian);
    Scalar mu = Scalar::from_int(field, sec.milnor->mu);
    s["mu"] = sec.milnor->mu;
    s["residue_of_hessian"] = scalar_json(res_h);
    s["hessian_residue_equals_mu"] = res_h == mu;
    ScalarMatrix gram = sec.residue->gram_on_basis();
    s["gram"] = matrix_strings(gram);
    Scalar det = gram.determinant();
    s["gram_determinant"] = scalar_json(det);
    s["gram_nonsingular"] = !det.is_zero();
    sectors.push_back(std::move(s));
  }
  out["sectors"] = std::move(sectors);
  return out;
}

Json report_chern(const InstanceContext& ctx) {
  Json out;
  out["command"] = "chern";
  Json objs = Json::array();
  for (const auto& e : ctx.objects) {
    Json o;
    o["label"] = e.label;
    EquivariantMF dual = dual_shifted(e, ctx.group);
    Json sectors = Json::array();
    bool all_agree = true, dual_law = true;
    for (size_t g = 0; g < ctx.group.size(); ++g) {
      const Sector& sec = ctx.sectors[g];
      Json s = sector_header(ctx, g);
      Poly hh = chern_hh(e, sec);
      Poly pv = chern_pv(e, sec);
      s["class"] = hh.str();
      s["trace_formula"] = pv.str();
      bool agree = hh == pv;
      s["routes_agree"] = agree;
      all_agree = all_agree && agree;
      Json coords = Json::array();
      for (const auto& c : chern_coordinates(hh, sec)) coords.push_back(c.str());
      s["coordinates"] = std::move(coords);

      Poly dual_ch = chern_hh(dual, ctx.sectors[ctx.group.inverse(g)]);
      Poly expected =
          hh * Poly::constant(hh.ring(), Scalar::from_int(hh.ring()->field, sec.parity_sign));
      bool dual_ok = transport(dual_ch, hh.ring()) == expected;
      s["dual_sign_law"] = dual_ok;
      dual_law = dual_law && dual_ok;
      sectors.push_back(std::move(s));
    }
    o["sectors"] = std::move(sectors);
    o["all_routes_agree"] = all_agree;
    o["dual_sign_law"] = dual_law;
    objs.push_back(std::move(o));
  }
  out["objects"] = std::move(objs);
  return out;
}

Json report_euler(const ProblemInstance& inst, const InstanceContext& ctx,
                  const std::string& method) {
  Json out;
  out["command"] = "euler";
  out["method"] = method;
  Json labels = Json::array();
  for (const auto& o : ctx.objects) labels.push_back(o.label);
  out["labels"] = std::move(labels);
  size_t n = ctx.objects.size();

  bool want_hrr = method == "hrr" || method == "both";
  bool want_oracle = method == "oracle" || method == "both";
  std::vector<std::vector<Scalar>> hrr;
  std::vector<std::vector<long>> oracle;
  if (want_hrr) {
    Json rows = Json::array();
    for (size_t i = 0; i < n; ++i) {
      hrr.emplace_back();
      Json row = Json::array();
      for (size_t j = 0; j < n; ++j) {
        Scalar chi = euler_hrr(ctx.objects[i], ctx.objects[j], ctx.group, ctx.sectors);
        hrr.back().push_back(chi);
        row.push_back(scalar_json(chi));
      }
      rows.push_back(std::move(row));
    }
    out["riemann_roch"] = std::move(rows);
  }
  if (want_oracle) {
    Json rows = Json::array();
    for (size_t i = 0; i < n; ++i) {
      oracle.emplace_back();
      Json row = Json::array();
      for (size_t j = 0; j < n; ++j) {
        long chi =
            euler_oracle(ctx.objects[i], ctx.objects[j], ctx.group, inst.f, inst.cutoff);
        oracle.back().push_back(chi);
        row.push_back(chi);
      }
      rows.push_back(std::move(row));
    }
    out["hom_complex"] = std::move(rows);
  }
  if (want_hrr && want_oracle) {
    bool agree = true;
    const FieldPtr& field = inst.field;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (hrr[i][j] != Scalar::from_int(field, oracle[i][j])) agree = false;
    out["methods_agree"] = agree;
  }
  return out;
}

Json report_positivity(const ProblemInstance& inst, const InstanceContext& ctx) {
  Json out;
  out["command"] = "positivity";
  Json objs = Json::array();
  for (const auto& e : ctx.objects) {
    Json o;
    o["label"] = e.label;
    Json sectors = Json::array();
    bool ok = true;
    for (size_t g = 0; g < ctx.group.size(); ++g) {
      const Sector& sec = ctx.sectors[g];
      if (sec.zero_dimensional || sec.n_g % 2 == 0) continue;
      PositivityResult r = sector_positivity(e, ctx.group, ctx.sectors, g, inst.precision);
      Json s = sector_header(ctx, g);
      s["value"] = scalar_json(r.value);
      s["real"] = r.real;
      s["sign"] = r.sign;
      s["class_vanishes"] = r.chern_zero;
      bool consistent = r.real && r.sign >= 0 && (r.sign == 0) == r.chern_zero;
      s["nonnegative_and_sharp"] = consistent;
      ok = ok && consistent;
      sectors.push_back(std::move(s));
    }
    o["sectors"] = std::move(sectors);
    o["all_nonnegative"] = ok;
    objs.push_back(std::move(o));
  }
  out["objects"] = std::move(objs);
  return out;
}

Json report_conjd(const InstanceContext& ctx) {
  GramReport r = gram_and_kernels(ctx.objects, ctx.group, ctx.sectors);
  Json out;
  out["command"] = "conjd";
  out["labels"] = r.labels;
  Json gram = Json::array();
  for (const auto& row : r.gram) {
    Json jrow = Json::array();
    for (const auto& s : row) jrow.push_back(scalar_json(s));
    gram.push_back(std::move(jrow));
  }
  out["gram"] = std::move(gram);
  out["right_radical_basis"] = vectors_json(r.radical_basis);
  out["left_radical_basis"] = vectors_json(r.left_radical_basis);
  out["chern_matrix"] = vectors_json(r.chern_matrix);
  out["chern_kernel_basis"] = vectors_json(r.chern_kernel_basis);
  out["radical_dimension"] = r.radical_basis.size();
  out["chern_kernel_dimension"] = r.chern_kernel_basis.size();
  out["holds"] = r.holds;
  if (!r.witness.empty()) out["witness"] = r.witness;
  std::string verdict = r.holds
      ? "holds (HH-level): radical dim " + std::to_string(r.radical_basis.size()) +
            " = chern kernel dim " + std::to_string(r.chern_kernel_basis.size()) +
            ", relative to the listed generating objects"
      : "fails (HH-level): " + r.witness;
  out["verdict"] = verdict;
  return out;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace emf
