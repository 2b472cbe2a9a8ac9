// Acceptance gate: one self-contained check per shipped property, each
// printing a single pass/fail line. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

#include "emf/chern.hpp"
#include "emf/corpus.hpp"
#include "emf/euler.hpp"
#include "emf/report.hpp"

using namespace emf;
using emf::testing::truncated_quotient_dimension;

namespace {

struct Gate {
  int failures = 0;

  void run(const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = true;
    try {
      body();
    } catch (const std::exception& ex) {
      ok = false;
      note = ex.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                static_cast<long long>(ms), note.empty() ? "" : ": ", note.c_str());
    if (!ok) ++failures;
  }
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

long chi_int(const Scalar& s) {
  expect(s.is_rational(), "euler value is not rational");
  Rational q = s.rational_part();
  expect(q.get_den() == 1, "euler value is not an integer");
  return q.get_num().get_si();
}

// ---------------------------------------------------------------------------

void milnor_numbers() {
  RingPtr r = emf::testing::make_ring(1, {"x", "y"});
  auto check_f = [&](const std::string& s, unsigned mu) {
    MilnorAlgebra m = milnor_algebra(parse_poly(s, r));
    expect(m.mu == mu, s + ": mu = " + std::to_string(m.mu) + ", expected " + std::to_string(mu));
    long trunc = truncated_quotient_dimension(m.partials, r);
    expect(trunc == static_cast<long>(mu), s + ": truncation oracle gives " + std::to_string(trunc));
  };
  for (unsigned n = 1; n <= 8; ++n) check_f("x^" + std::to_string(n + 1) + " + y^2", n);
  for (unsigned k = 4; k <= 6; ++k) check_f("x^" + std::to_string(k - 1) + " + x*y^2", k);
  check_f("x^3 + y^4", 6);
  check_f("x^3 + x*y^3", 7);
  check_f("x^3 + y^5", 8);
}

void residue_sanity() {
  for (const auto& [label, inst] : default_corpus()) {
    InstanceContext ctx = build_context(inst);
    const Sector& id = ctx.sectors[0];
    const MilnorAlgebra& m = *id.milnor;
    Scalar res_hess = id.residue->residue(m.hessian);
    expect(res_hess == Scalar::from_int(inst.field, m.mu),
           label + ": res(det Hess) != mu");
    expect(!id.residue->gram_on_basis().determinant().is_zero(),
           label + ": residue Gram matrix is singular");
  }
}

void trace_formula_agreement() {
  for (const auto& [label, inst] : default_corpus()) {
    InstanceContext ctx = build_context(inst);
    for (const EquivariantMF& obj : ctx.objects)
      for (const Sector& sec : ctx.sectors) {
        if (sec.zero_dimensional || sec.n_g % 2 == 0) continue;
        Poly diff = chern_pv(obj, sec) - chern_hh(obj, sec);
        expect(sec.milnor->normal_form(diff).is_zero(),
               label + "/" + obj.label + ": chern routes disagree");
      }
  }
}

void check_dual_law(const InstanceContext& ctx, const EquivariantMF& obj,
                    const std::string& where) {
  EquivariantMF dual = dual_shifted(obj, ctx.group);
  for (size_t g = 0; g < ctx.group.size(); ++g) {
    const Sector& sec = ctx.sectors[g];
    const Sector& inv = ctx.sectors[ctx.group.inverse(g)];
    Poly lhs = chern_hh(dual, inv);
    Poly rhs = chern_hh(obj, sec);
    Scalar sign = Scalar::from_int(ctx.group.ring()->field, sec.parity_sign);
    if (sec.zero_dimensional) {
      expect(lhs.constant_term() == rhs.constant_term() * sign, where + ": dual sign law fails");
    } else {
      Poly diff = transport(lhs, sec.locus.sub_ring) - rhs * sign;
      expect(sec.milnor->normal_form(diff).is_zero(), where + ": dual sign law fails");
    }
  }
}

void dual_sign_law() {
  struct Entry {
    std::string label;
    ProblemInstance inst;
    InstanceContext ctx;
  };
  std::vector<Entry> pool;
  for (const auto& [label, inst] : default_corpus()) {
    pool.push_back({label, inst, build_context(inst)});
    const InstanceContext& ctx = pool.back().ctx;
    for (const EquivariantMF& obj : ctx.objects) check_dual_law(ctx, obj, label + "/" + obj.label);
  }

  // 25 randomized block-diagonal objects: direct sums of corpus objects and
  // their duals, optionally twisted by a character of the (abelian) group.
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 25; ++trial) {
    const Entry& entry = pool[rng() % pool.size()];
    const std::string& label = entry.label;
    const InstanceContext& ctx = entry.ctx;
    auto random_summand = [&]() {
      const EquivariantMF& base = ctx.objects[rng() % ctx.objects.size()];
      EquivariantMF piece = (rng() % 2) ? dual_shifted(base, ctx.group) : base;
      if (ctx.group.size() > 1 && (rng() % 2)) {
        const auto& chars = ctx.group.characters();
        const auto& chi = chars[rng() % chars.size()];
        std::vector<ScalarMatrix> rho;
        for (size_t e = 0; e < ctx.group.size(); ++e) {
          ScalarMatrix m(1, 1, ctx.group.ring()->field);
          m.at(0, 0) = chi[e];
          rho.push_back(m);
        }
        piece = tensor_rep(piece, rho, ctx.group);
      }
      return piece;
    };
    EquivariantMF obj = random_summand();
    unsigned summands = 1 + rng() % 2;
    for (unsigned s = 0; s < summands; ++s) obj = direct_sum(obj, random_summand(), ctx.group);
    obj.label = "random-" + std::to_string(trial);
    expect(validate_mf(obj, entry.inst.f, ctx.group).empty(),
           obj.label + ": randomized object is invalid");
    check_dual_law(ctx, obj, label + "/" + obj.label);
  }
}

void hrr_equals_oracle() {
  {  // node: on/off diagonal values 1 / -1
    ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 2}});
    InstanceContext ctx = build_context(inst);
    long expected[2][2] = {{1, -1}, {-1, 1}};
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        long hrr = chi_int(euler_hrr(ctx.objects[i], ctx.objects[j], ctx.group, ctx.sectors));
        long orc = euler_oracle(ctx.objects[i], ctx.objects[j], ctx.group, inst.f);
        expect(hrr == expected[i][j] && orc == expected[i][j], "node gram mismatch");
      }
  }
  {  // spinor: chi(E, E) = 1
    ProblemInstance inst = generate_corpus("spinor", Json::object());
    InstanceContext ctx = build_context(inst);
    long hrr = chi_int(euler_hrr(ctx.objects[0], ctx.objects[0], ctx.group, ctx.sectors));
    long orc = euler_oracle(ctx.objects[0], ctx.objects[0], ctx.group, inst.f);
    expect(hrr == 1 && orc == 1, "spinor chi != 1");
  }
  {  // 4-variable quadric with g = diag(1,1,-1,-1)
    ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 4}});
    InstanceContext ctx = build_context(inst);
    for (size_t i = 0; i < ctx.objects.size(); ++i)
      for (size_t j = 0; j < ctx.objects.size(); ++j) {
        long hrr = chi_int(euler_hrr(ctx.objects[i], ctx.objects[j], ctx.group, ctx.sectors));
        long orc = euler_oracle(ctx.objects[i], ctx.objects[j], ctx.group, inst.f);
        expect(hrr == orc, "4-variable quadric mismatch");
      }
  }
  {  // suspended A2: chi(E, E) = 0
    ProblemInstance inst =
        generate_corpus("an_suspended", Json{{"n", 2}, {"a", 1}, {"group", "trivial"}});
    InstanceContext ctx = build_context(inst);
    long hrr = chi_int(euler_hrr(ctx.objects[0], ctx.objects[0], ctx.group, ctx.sectors));
    long orc = euler_oracle(ctx.objects[0], ctx.objects[0], ctx.group, inst.f);
    expect(hrr == 0 && orc == 0, "suspended A2 chi != 0");
  }
}

void positivity() {
  for (const auto& [label, inst] : default_corpus()) {
    InstanceContext ctx = build_context(inst);
    for (const EquivariantMF& obj : ctx.objects)
      for (size_t g = 0; g < ctx.group.size(); ++g) {
        const Sector& sec = ctx.sectors[g];
        if (sec.zero_dimensional || sec.n_g % 2 == 0) continue;
        PositivityResult p = sector_positivity(obj, ctx.group, ctx.sectors, g, inst.precision);
        expect(p.real, label + "/" + obj.label + ": value not certified real");
        expect(p.sign >= 0, label + "/" + obj.label + ": negative polarization value");
        expect((p.sign == 0) == p.chern_zero,
               label + "/" + obj.label + ": zero value does not match class vanishing");
      }
  }
}

void conjecture_d() {
  for (const auto& [label, inst] : default_corpus()) {
    InstanceContext ctx = build_context(inst);
    GramReport rep = gram_and_kernels(ctx.objects, ctx.group, ctx.sectors);
    expect(rep.holds, label + ": radical != chern kernel (" + rep.witness + ")");
    if (label == "node") {
      expect(rep.radical_basis.size() == 1 && rep.radical_basis[0].size() == 2 &&
                 rep.radical_basis[0][0] == rep.radical_basis[0][1] &&
                 !rep.radical_basis[0][0].is_zero(),
             "node radical is not span{(1,1)}");
    }
  }
}

void determinism_round_trip() {
  for (const auto& [label, inst] : default_corpus()) {
    Json doc = serialize_instance(inst);
    ProblemInstance back = parse_instance_json(doc);
    expect(instances_equal(inst, back), label + ": round trip changed the instance");
    expect(serialize_instance(back).dump(2) == doc.dump(2),
           label + ": serialization not canonical");
  }
  // Reports are byte-identical across independent context builds.
  ProblemInstance inst = generate_corpus("quadric", Json{{"nvars", 2}});
  InstanceContext a = build_context(inst);
  InstanceContext b = build_context(inst);
  expect(render_report(report_euler(inst, a, "both")) ==
             render_report(report_euler(inst, b, "both")),
         "euler report not deterministic");
  expect(render_report(report_conjd(a)) == render_report(report_conjd(b)),
         "pairing report not deterministic");
}

}  // namespace

int main() {
  Gate gate;
  gate.run("1. Milnor numbers match classical values and the truncation oracle", milnor_numbers);
  gate.run("2. residue of the Hessian is mu; residue Gram nonsingular", residue_sanity);
  gate.run("3. both Chern routes agree on every odd sector", trace_formula_agreement);
  gate.run("4. dual sign law on corpus and 25 randomized objects", dual_sign_law);
  gate.run("5. Riemann-Roch pairing equals the morphism-complex oracle", hrr_equals_oracle);
  gate.run("6. sector polarization values certified real, nonnegative, sharp", positivity);
  gate.run("7. Gram radical equals the Chern kernel on every instance", conjecture_d);
  gate.run("8. determinism and serialize/parse round trip", determinism_round_trip);
  return gate.failures;
}
