#include "algraph/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "algraph/errors.hpp"

namespace algraph {

FieldPoly FieldPoly::monomial(FieldElement c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  FieldPoly q;
  if (c.is_zero()) return q;
  q.coeffs.assign(static_cast<std::size_t>(exponent) + 1, FieldElement{});
  q.coeffs.back() = c;
  return q;
}

bool FieldPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](FieldElement c) { return c.is_zero(); });
}

std::optional<int> FieldPoly::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> FieldPoly::lowest_degree() const {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  }
  return std::nullopt;
}

FieldElement FieldPoly::coeff(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= coeffs.size()) return FieldElement{};
  return coeffs[static_cast<std::size_t>(d)];
}

void FieldPoly::normalize() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
  }
  return true;
}

FieldElement poly_eval(const PrimeField& f, const FieldPoly& q, FieldElement y0) {
  FieldElement acc{};
  for (std::size_t i = q.coeffs.size(); i-- > 0;) {
    acc = f.add(f.mul(acc, y0), q.coeffs[i]);
  }
  return acc;
}

FieldPoly poly_add(const PrimeField& f, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    r.coeffs[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  r.normalize();
  return r;
}

FieldPoly poly_mul(const PrimeField& f, const FieldPoly& a, const FieldPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  FieldPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, FieldElement{});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  r.normalize();
  return r;
}

LagrangeBasis::LagrangeBasis(const PrimeField& f, std::span<const FieldElement> xs)
    : n_(xs.size()), rows_(n_ * n_), prefix_(n_ * n_) {
  if (n_ == 0) return;
  {
    std::vector<FieldElement> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end(),
              [](FieldElement a, FieldElement b) { return a.value < b.value; });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DuplicateNode();
    }
  }
  // master(y) = prod_j (y - x_j), degree n.
  std::vector<FieldElement> master(n_ + 1, FieldElement{});
  master[0] = f.one();
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = j + 1; i-- > 0;) {
      FieldElement shifted = master[i];
      master[i + 1] = f.add(master[i + 1], shifted);
      master[i] = f.mul(master[i], f.neg(xs[j]));
    }
  }
  // master has been built as coefficients of y^i in increasing order.
  std::vector<FieldElement> quotient(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    // Synthetic division of master by (y - x_k).
    FieldElement carry{};
    for (std::size_t i = n_; i-- > 0;) {
      carry = f.add(master[i + 1], f.mul(carry, xs[k]));
      quotient[i] = carry;
    }
    FieldElement denom = poly_eval(f, FieldPoly(quotient), xs[k]);
    FieldElement scale = f.inv(denom);
    FieldElement running{};
    for (std::size_t d = 0; d < n_; ++d) {
      rows_[k * n_ + d] = f.mul(quotient[d], scale);
      running = f.add(running, rows_[k * n_ + d]);
      prefix_[k * n_ + d] = running;
    }
  }
}

FieldPoly lagrange_interpolate(const PrimeField& f, std::span<const FieldElement> xs,
                               std::span<const FieldElement> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("lagrange_interpolate: |xs| != |ys|");
  }
  if (xs.size() > f.modulus()) throw InsufficientField("more nodes than field elements");
  LagrangeBasis basis(f, xs);
  FieldPoly r;
  r.coeffs.assign(xs.size(), FieldElement{});
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (ys[k].is_zero()) continue;
    for (std::size_t d = 0; d < xs.size(); ++d) {
      r.coeffs[d] = f.add(r.coeffs[d], f.mul(ys[k], basis.coeff(k, d)));
    }
  }
  r.normalize();
  return r;
}

FieldElement prefix_sum_coeff(const PrimeField& f, const FieldPoly& q, int c) {
  FieldElement acc{};
  for (int i = 0; i <= c && static_cast<std::size_t>(i) < q.coeffs.size(); ++i) {
    acc = f.add(acc, q.coeffs[static_cast<std::size_t>(i)]);
  }
  return acc;
}

}  // namespace algraph
