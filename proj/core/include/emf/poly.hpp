#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "emf/scalar.hpp"

namespace emf {

/// Exponent vector; fixed-width entries, degrees >= 2^15 are rejected at parse.
using Monomial = std::vector<std::uint16_t>;

unsigned total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, assumes a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// Degree-reverse-lexicographic order (the only monomial order used here).
struct DegRevLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Variable context shared by all polynomials of a problem instance.
struct PolyRing {
  FieldPtr field;
  std::vector<std::string> vars;

  PolyRing(FieldPtr f, std::vector<std::string> v) : field(std::move(f)), vars(std::move(v)) {}
  size_t nvars() const { return vars.size(); }
  int var_index(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Sparse multivariate polynomial over Scalar. Terms are kept in degrevlex
/// order with no zero coefficients stored; values are immutable in spirit
/// (mutating operators return-by-value underneath).
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(const RingPtr& ring) { return Poly(ring); }
  static Poly constant(const RingPtr& ring, const Scalar& c);
  static Poly variable(const RingPtr& ring, size_t i, unsigned power = 1);
  static Poly monomial(const RingPtr& ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Scalar, DegRevLexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  unsigned degree() const;  // total degree; 0 for the zero polynomial

  /// Leading term under degrevlex (the largest). Requires nonzero.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;

  Scalar coeff(const Monomial& m) const;  // zero scalar if absent

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned k) const;

  /// Formal partial derivative with respect to variable i.
  Poly derivative(size_t i) const;

  /// Substitute each variable x_i by images[i] (a polynomial over target ring).
  Poly substitute(const std::vector<Poly>& images, const RingPtr& target) const;

  /// Add a single term, merging and dropping zeros.
  void add_term(const Monomial& m, const Scalar& c);

  /// Canonical string, terms in descending degrevlex order.
  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Monomial, Scalar, DegRevLexLess> terms_;
};

/// Term-wise copy into another ring with the same variable count (identifies
/// canonically matching coordinate systems, e.g. the fixed loci of mutually
/// inverse group elements).
Poly transport(const Poly& p, const RingPtr& target);

class ScalarMatrix;  // linalg.hpp

/// The group action p |-> p(M^{-1} x) for an invertible matrix M of g on
/// the variables; a ring homomorphism and a left group action.
Poly act_linear(const Poly& p, const ScalarMatrix& M);

/// Adapted coordinates for the fixed locus of a diagonalizable matrix:
/// x = P*y with the first `fixed_dim` columns of P spanning ker(M - I).
struct FixedLocus {
  std::vector<std::vector<Scalar>> P;  // (nvars) x (nvars), columns = eigenvectors
  unsigned fixed_dim = 0;
  RingPtr sub_ring;                     // ring on y_1..y_{fixed_dim}
  std::vector<Scalar> nonfixed_eigenvalues;  // with multiplicity
};

/// Eigenspace decomposition of M over Q(zeta_m); throws validation_error if
/// M is not diagonalizable with m-th-root-of-unity eigenvalues.
FixedLocus fixed_locus(const ScalarMatrix& M, const RingPtr& ring);

/// p restricted to the fixed locus: substitute x = P*(y, 0).
Poly restrict_to_fixed(const Poly& p, const FixedLocus& locus);

}  // namespace emf
