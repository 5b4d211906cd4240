#pragma once

#include <optional>
#include <span>
#include <vector>

#include "algraph/field.hpp"

namespace algraph {

/// Dense univariate polynomial over Z_p; coeffs[i] multiplies y^i.
/// Trailing zeros are tolerated; normalize() gives the canonical form.
struct FieldPoly {
  std::vector<FieldElement> coeffs;

  FieldPoly() = default;
  explicit FieldPoly(std::vector<FieldElement> c) : coeffs(std::move(c)) {}

  static FieldPoly monomial(FieldElement c, int exponent);

  bool is_zero() const;
  /// Highest nonzero degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Lowest degree with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<int> lowest_degree() const;
  /// Coefficient of y^d (zero past the end).
  FieldElement coeff(int d) const;

  void normalize();
  friend bool operator==(const FieldPoly& a, const FieldPoly& b);
};

/// Horner evaluation.
FieldElement poly_eval(const PrimeField& f, const FieldPoly& q, FieldElement y0);

FieldPoly poly_add(const PrimeField& f, const FieldPoly& a, const FieldPoly& b);

/// Schoolbook product.
FieldPoly poly_mul(const PrimeField& f, const FieldPoly& a, const FieldPoly& b);

/// Coefficients of the Lagrange basis for the nodes xs: row k holds the
/// coefficients of L_k(y) = prod_{j != k} (y - x_j) / (x_k - x_j).
/// Throws DuplicateNode on repeated nodes.
class LagrangeBasis {
 public:
  LagrangeBasis(const PrimeField& f, std::span<const FieldElement> xs);

  std::size_t size() const { return n_; }
  /// Coefficient of y^d in L_k.
  FieldElement coeff(std::size_t k, std::size_t d) const { return rows_[k * n_ + d]; }
  /// Sum over i <= d of the coefficients of y^i in L_k.
  FieldElement prefix(std::size_t k, std::size_t d) const { return prefix_[k * n_ + d]; }

 private:
  std::size_t n_;
  std::vector<FieldElement> rows_;
  std::vector<FieldElement> prefix_;
};

/// The unique polynomial of degree < |xs| through (xs[k], ys[k]).
FieldPoly lagrange_interpolate(const PrimeField& f, std::span<const FieldElement> xs,
                               std::span<const FieldElement> ys);

/// Coefficient of y^c in q * (1 + y + ... + y^L) for any L >= c, i.e. the sum of
/// the coefficients of q up to degree c. Negative c gives zero.
FieldElement prefix_sum_coeff(const PrimeField& f, const FieldPoly& q, int c);

}  // namespace algraph
