#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algraph/field.hpp"
#include "algraph/poly.hpp"

namespace algraph {

using VarId = u64;

/// Entry (row, col) contains the term sign * x * y^exponent for the variable x
/// that owns this link.
struct VarLink {
  std::size_t row;
  std::size_t col;
  int sign;
  int exponent;
};

/// A variable of a symbolic matrix: its substituted value sigma(x) and the
/// entries it appears in.
struct Variable {
  FieldElement value;
  std::vector<VarLink> links;
};

/// n x n matrix of polynomials in y, already evaluated at a substitution
/// sigma for every variable. `variables` keeps enough structure to
/// differentiate with respect to each variable by the chain rule.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const { return n_; }
  int deg_bound() const { return deg_bound_; }

  const FieldPoly& at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  /// Adds coeff * y^exponent to entry (r, c).
  void add_term(const PrimeField& f, std::size_t r, std::size_t c, FieldElement coeff,
                int exponent);

  /// Adds sign * value * y^exponent to (r, c) and records the link for `id`.
  void add_variable_term(const PrimeField& f, VarId id, FieldElement value, std::size_t r,
                         std::size_t c, int sign, int exponent);

  /// Declares a variable whose substituted value is zero (a Z-style probe):
  /// entries are unchanged but gradients with respect to it are available.
  void add_probe(VarId id, std::size_t r, std::size_t c, int exponent);

  /// M += y^exponent * I.
  void add_identity(const PrimeField& f, int exponent = 0);
  /// Multiplies every entry (and every link) by y^k.
  void shift_y(int k);

  const std::map<VarId, Variable>& variables() const { return variables_; }
  const Variable& variable(VarId id) const { return variables_.at(id); }

  /// Evaluates the entries at y = y0 into a row-major dense matrix.
  std::vector<FieldElement> evaluate(const PrimeField& f, FieldElement y0) const;

  /// Value sigma(x) * y^e contributed by links at (y0); used to separate the
  /// variable part from the constant part when re-recording on a tape.
  std::vector<FieldElement> variable_part(const PrimeField& f, FieldElement y0) const;

 private:
  void bump_degree(int e) {
    if (e > deg_bound_) deg_bound_ = e;
  }

  std::size_t n_ = 0;
  int deg_bound_ = 0;
  std::vector<FieldPoly> entries_;
  std::map<VarId, Variable> variables_;
};

/// Full coefficient vector of a determinant and its lowest nonzero degree.
struct DegreeReport {
  std::optional<int> lowest_degree;
  FieldPoly coeffs;
};

/// Dense determinant at a point; Gaussian elimination, first-nonzero pivot.
FieldElement dense_determinant(const PrimeField& f, std::vector<FieldElement> a, std::size_t n);

/// Inverse and determinant at a point. Returns false if singular.
bool dense_inverse(const PrimeField& f, const std::vector<FieldElement>& a, std::size_t n,
                   std::vector<FieldElement>& inverse, FieldElement& det);

/// Exact determinant polynomial by evaluation at y = 1..D, D = n*deg_bound + 1,
/// followed by interpolation. Throws InsufficientField if D > p.
DegreeReport det_poly(const PrimeField& f, const PolyMatrix& m);

/// Lowest nonzero degree of every adjugate entry (row-major); nullopt for identically-zero
/// entries. Throws SingularEverywhere if det(M) is the zero polynomial.
std::vector<std::optional<int>> adjugate_degree_matrix(const PrimeField& f,
                                                       const PolyMatrix& m);

/// Same, restricted to the requested (row, col) entries.
std::vector<std::optional<int>> adjugate_degrees(
    const PrimeField& f, const PolyMatrix& m,
    const std::vector<std::pair<std::size_t, std::size_t>>& entries);

enum class GradientBackend { Adjugate, Tape };

/// Per-point gradients of det(M(y_k)) for every variable, together with a
/// Lagrange basis over the points. Any coefficient of the determinant (or a
/// prefix sum of coefficients) can then be differentiated in O(D) per
/// variable, which is what a binary search over degrees needs.
class CoefficientGradients {
 public:
  CoefficientGradients(const PrimeField& f, const PolyMatrix& m,
                       GradientBackend backend = GradientBackend::Adjugate);

  std::size_t points() const { return points_.size(); }
  /// Highest degree that can carry a nonzero coefficient: n * deg_bound.
  int max_degree() const { return max_degree_; }

  const FieldPoly& determinant() const { return det_; }

  /// d/dx of term^d_y det(M) (prefix = false) or of sum_{i <= d} term^i_y det(M)
  /// (prefix = true).
  FieldElement partial(VarId x, int d, bool prefix) const;
  std::map<VarId, FieldElement> gradient(int d, bool prefix) const;

 private:
  const PrimeField* field_;
  int max_degree_;
  std::vector<FieldElement> points_;
  std::optional<LagrangeBasis> basis_;
  std::map<VarId, std::vector<FieldElement>> per_point_;
  FieldPoly det_;
};

/// Single-call form of CoefficientGradients::gradient.
std::map<VarId, FieldElement> coeff_gradient(const PrimeField& f, const PolyMatrix& m, int d,
                                             bool prefix,
                                             GradientBackend backend = GradientBackend::Adjugate);

/// Outcome of a randomized zero test at one substitution.
struct ZeroTestVerdict {
  bool nonzero;
  /// Upper bound on the probability that a "zero" verdict is wrong.
  double false_zero_bound;
};

ZeroTestVerdict symbolic_nonzero(const PrimeField& f, FieldElement value, u64 degree_bound);

}  // namespace algraph
