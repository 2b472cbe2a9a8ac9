#include "emf/groebner.hpp"

#include <algorithm>
#include <list>

namespace emf {

namespace {

struct Tracked {
  Poly p;
  std::vector<Poly> cof;  // p = sum cof[j] * input[j]
};

// Divide p by the current working set, tracking the accumulated cofactors of
// the subtracted multiples in terms of the input generators.
Tracked reduce_full(Tracked t, const std::vector<Tracked>& basis) {
  const RingPtr& ring = t.p.ring();
  Poly rem(ring);
  std::vector<Poly> rem_cof = t.cof;
  Poly h = t.p;
  // subtracted = sum over reducers; rem_cof keeps h + rem = original combo
  while (!h.is_zero()) {
    bool reduced = false;
    const Monomial& lm = h.leading_monomial();
    for (const auto& g : basis) {
      if (g.p.is_zero()) continue;
      if (!mono_divides(g.p.leading_monomial(), lm)) continue;
      Monomial q = mono_div(lm, g.p.leading_monomial());
      Scalar c = h.leading_coeff() / g.p.leading_coeff();
      Poly mult = Poly::monomial(ring, q, c);
      h -= mult * g.p;
      for (size_t j = 0; j < rem_cof.size(); ++j) rem_cof[j] -= mult * g.cof[j];
      reduced = true;
      break;
    }
    if (!reduced) {
      // move leading term to the remainder
      rem.add_term(h.leading_monomial(), h.leading_coeff());
      Poly lt = Poly::monomial(ring, h.leading_monomial(), h.leading_coeff());
      h -= lt;
    }
  }
  // now original = rem + sum (t.cof - rem_cof)... bookkeeping: rem_cof currently
  // holds cof(original) - cof(subtracted); rem = original - subtracted, so
  // rem = sum rem_cof * input exactly when original = sum t.cof * input.
  return Tracked{std::move(rem), std::move(rem_cof)};
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Poly> gens) {
  if (gens.empty()) throw validation_error("empty generator list");
  ring_ = gens.front().ring();
  input_ = gens;

  std::vector<Tracked> work;
  for (size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    std::vector<Poly> cof(gens.size(), Poly::zero(ring_));
    cof[j] = Poly::constant(ring_, Scalar::one(ring_->field));
    work.push_back(Tracked{gens[j], std::move(cof)});
  }
  if (work.empty()) throw validation_error("all generators are zero");

  // Buchberger, normal selection strategy: treat pairs in degrevlex order of
  // their lcm. Product criterion prunes coprime leading monomials.
  std::list<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = i + 1; j < work.size(); ++j) pairs.emplace_back(i, j);

  DegRevLexLess less;
  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm =
        mono_lcm(work[best->first].p.leading_monomial(), work[best->second].p.leading_monomial());
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = mono_lcm(work[it->first].p.leading_monomial(),
                            work[it->second].p.leading_monomial());
      if (less(l, best_lcm)) {
        best = it;
        best_lcm = l;
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);

    const Monomial& lmi = work[i].p.leading_monomial();
    const Monomial& lmj = work[j].p.leading_monomial();
    if (total_degree(mono_lcm(lmi, lmj)) == total_degree(lmi) + total_degree(lmj)) {
      bool coprime = true;
      for (size_t v = 0; v < lmi.size(); ++v)
        if (lmi[v] > 0 && lmj[v] > 0) coprime = false;
      if (coprime) continue;  // product criterion
    }

    Monomial l = mono_lcm(lmi, lmj);
    Poly mi = Poly::monomial(ring_, mono_div(l, lmi),
                             Scalar::one(ring_->field) / work[i].p.leading_coeff());
    Poly mj = Poly::monomial(ring_, mono_div(l, lmj),
                             Scalar::one(ring_->field) / work[j].p.leading_coeff());
    Tracked s;
    s.p = mi * work[i].p - mj * work[j].p;
    s.cof.assign(input_.size(), Poly::zero(ring_));
    for (size_t k = 0; k < input_.size(); ++k)
      s.cof[k] = mi * work[i].cof[k] - mj * work[j].cof[k];

    Tracked r = reduce_full(std::move(s), work);
    if (r.p.is_zero()) continue;
    size_t idx = work.size();
    work.push_back(std::move(r));
    for (size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(work.size(), true);
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (mono_divides(work[j].p.leading_monomial(), work[i].p.leading_monomial()) &&
          (work[j].p.leading_monomial() != work[i].p.leading_monomial() || j < i))
        keep[i] = false;
    }
  std::vector<Tracked> minimal;
  for (size_t i = 0; i < work.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(work[i]));

  // Reduce tails against the other elements and normalize monic.
  std::vector<Tracked> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Tracked> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Tracked r = reduce_full(minimal[i], others);
    Scalar lc_inv = r.p.leading_coeff().inverse();
    r.p = r.p * lc_inv;
    for (auto& c : r.cof) c = c * lc_inv;
    reduced.push_back(std::move(r));
  }

  // Canonical order: ascending leading monomial.
  std::sort(reduced.begin(), reduced.end(), [&less](const Tracked& a, const Tracked& b) {
    return less(a.p.leading_monomial(), b.p.leading_monomial());
  });

  for (auto& t : reduced) {
    basis_.push_back(std::move(t.p));
    cof_.push_back(std::move(t.cof));
  }
}

Poly GroebnerBasis::normal_form(const Poly& p) const { return reduce_tracked(p).first; }

std::pair<Poly, std::vector<Poly>> GroebnerBasis::reduce_tracked(const Poly& p) const {
  Poly rem(ring_);
  std::vector<Poly> quot(basis_.size(), Poly::zero(ring_));
  Poly h = p;
  while (!h.is_zero()) {
    bool reduced = false;
    const Monomial& lm = h.leading_monomial();
    for (size_t k = 0; k < basis_.size(); ++k) {
      if (!mono_divides(basis_[k].leading_monomial(), lm)) continue;
      Monomial q = mono_div(lm, basis_[k].leading_monomial());
      Scalar c = h.leading_coeff() / basis_[k].leading_coeff();
      Poly mult = Poly::monomial(ring_, q, c);
      h -= mult * basis_[k];
      quot[k] += mult;
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(h.leading_monomial(), h.leading_coeff());
      h -= Poly::monomial(ring_, h.leading_monomial(), h.leading_coeff());
    }
  }
  return {std::move(rem), std::move(quot)};
}

std::optional<std::vector<Poly>> GroebnerBasis::lift_cofactors(const Poly& p) const {
  auto [rem, quot] = reduce_tracked(p);
  if (!rem.is_zero()) return std::nullopt;
  std::vector<Poly> out(input_.size(), Poly::zero(ring_));
  for (size_t k = 0; k < basis_.size(); ++k) {
    if (quot[k].is_zero()) continue;
    for (size_t j = 0; j < input_.size(); ++j) out[j] += quot[k] * cof_[k][j];
  }
  // exact reconstruction check
  Poly recon(ring_);
  for (size_t j = 0; j < input_.size(); ++j) recon += out[j] * input_[j];
  if (recon != p) throw computation_error("cofactor lift failed reconstruction");
  return out;
}

}  // namespace emf
