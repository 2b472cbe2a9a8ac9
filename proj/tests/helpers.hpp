#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "emf/corpus.hpp"
#include "emf/instance.hpp"
#include "emf/linalg.hpp"
#include "emf/milnor.hpp"
#include "emf/parser.hpp"

namespace emf::testing {

inline RingPtr make_ring(unsigned order, std::vector<std::string> vars) {
  auto field = std::make_shared<CyclotomicField>(order);
  return std::make_shared<PolyRing>(field, std::move(vars));
}

inline InstanceContext corpus_context(const std::string& family, const Json& params) {
  return build_context(generate_corpus(family, params));
}

/// Independent dimension oracle for dim_Q R/I: counts monomials of degree
/// <= N modulo the degree-truncated span of {m * g : g in gens}, and
/// requires the count to stabilize at two consecutive truncations.
inline long truncated_quotient_dimension(const std::vector<Poly>& gens, const RingPtr& ring,
                                         unsigned max_trunc = 40) {
  auto dim_at = [&](unsigned N) -> long {
    // All monomials of total degree <= N, in a fixed order.
    std::vector<Monomial> monos;
    Monomial cur(ring->nvars(), 0);
    std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned rem) {
      if (i == cur.size()) {
        monos.push_back(cur);
        return;
      }
      for (unsigned e = 0; e <= rem; ++e) {
        cur[i] = static_cast<std::uint16_t>(e);
        rec(i + 1, rem - e);
      }
      cur[i] = 0;
    };
    rec(0, N);
    std::map<Monomial, size_t, DegRevLexLess> index;
    for (size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;

    // Rows: m*g truncated to degree <= N, for every monomial m with
    // deg(m) + deg(g) reaching at most N on the leading part.
    std::vector<std::vector<Scalar>> rows;
    const FieldPtr& field = ring->field;
    for (const Poly& g : gens) {
      for (const Monomial& m : monos) {
        Poly prod = g * Poly::monomial(ring, m, Scalar::one(field));
        std::vector<Scalar> row(monos.size(), Scalar::zero(field));
        bool any = false;
        for (const auto& [mm, c] : prod.terms()) {
          auto it = index.find(mm);
          if (it == index.end()) continue;  // truncated away
          row[it->second] = c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    ScalarMatrix mat(rows.size(), monos.size(), field);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < monos.size(); ++j) mat.at(i, j) = rows[i][j];
    return static_cast<long>(monos.size()) - static_cast<long>(mat.rank());
  };

  long prev = -1;
  for (unsigned N = 4; N <= max_trunc; N += 2) {
    long d = dim_at(N);
    if (d == prev) return d;
    prev = d;
  }
  throw computation_error("truncated dimension oracle did not stabilize");
}

}  // namespace emf::testing
