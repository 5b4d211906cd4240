#include "algraph/polymatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "algraph/errors.hpp"
#include "algraph/tape.hpp"

namespace algraph {

void PolyMatrix::add_term(const PrimeField& f, std::size_t r, std::size_t c, FieldElement coeff,
                          int exponent) {
  if (exponent < 0) throw std::invalid_argument("PolyMatrix: negative exponent");
  FieldPoly& e = entries_[r * n_ + c];
  if (e.coeffs.size() <= static_cast<std::size_t>(exponent)) {
    e.coeffs.resize(static_cast<std::size_t>(exponent) + 1);
  }
  e.coeffs[static_cast<std::size_t>(exponent)] =
      f.add(e.coeffs[static_cast<std::size_t>(exponent)], coeff);
  bump_degree(exponent);
}

void PolyMatrix::add_variable_term(const PrimeField& f, VarId id, FieldElement value,
                                   std::size_t r, std::size_t c, int sign, int exponent) {
  add_term(f, r, c, sign < 0 ? f.neg(value) : value, exponent);
  Variable& var = variables_[id];
  if (!var.links.empty() && var.value != value) {
    throw std::invalid_argument("PolyMatrix: variable " + std::to_string(id) +
                                " substituted with two different values");
  }
  var.value = value;
  var.links.push_back({r, c, sign, exponent});
}

void PolyMatrix::add_probe(VarId id, std::size_t r, std::size_t c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("PolyMatrix: negative exponent");
  Variable& var = variables_[id];
  var.value = FieldElement{};
  var.links.push_back({r, c, +1, exponent});
  bump_degree(exponent);
}

void PolyMatrix::add_identity(const PrimeField& f, int exponent) {
  for (std::size_t i = 0; i < n_; ++i) add_term(f, i, i, f.one(), exponent);
}

void PolyMatrix::shift_y(int k) {
  if (k < 0) throw std::invalid_argument("PolyMatrix::shift_y: negative shift");
  if (k == 0) return;
  for (FieldPoly& e : entries_) {
    if (e.coeffs.empty()) continue;
    e.coeffs.insert(e.coeffs.begin(), static_cast<std::size_t>(k), FieldElement{});
  }
  for (auto& [id, var] : variables_) {
    for (VarLink& link : var.links) link.exponent += k;
  }
  deg_bound_ += k;
}

std::vector<FieldElement> PolyMatrix::evaluate(const PrimeField& f, FieldElement y0) const {
  std::vector<FieldElement> out(n_ * n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = poly_eval(f, entries_[i], y0);
  return out;
}

std::vector<FieldElement> PolyMatrix::variable_part(const PrimeField& f,
                                                    FieldElement y0) const {
  std::vector<FieldElement> out(n_ * n_);
  for (const auto& [id, var] : variables_) {
    for (const VarLink& link : var.links) {
      FieldElement t = f.mul(var.value, f.pow(y0, static_cast<u64>(link.exponent)));
      if (link.sign < 0) t = f.neg(t);
      out[link.row * n_ + link.col] = f.add(out[link.row * n_ + link.col], t);
    }
  }
  return out;
}

FieldElement dense_determinant(const PrimeField& f, std::vector<FieldElement> a,
                               std::size_t n) {
  FieldElement det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return FieldElement{};
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = f.neg(det);
    }
    FieldElement piv = a[col * n + col];
    det = f.mul(det, piv);
    FieldElement piv_inv = f.inv(piv);
    for (std::size_t row = col + 1; row < n; ++row) {
      FieldElement lead = a[row * n + col];
      if (lead.is_zero()) continue;
      FieldElement factor = f.mul(lead, piv_inv);
      for (std::size_t j = col + 1; j < n; ++j) {
        a[row * n + j] = f.sub(a[row * n + j], f.mul(factor, a[col * n + j]));
      }
    }
  }
  return det;
}

bool dense_inverse(const PrimeField& f, const std::vector<FieldElement>& a_in, std::size_t n,
                   std::vector<FieldElement>& inverse, FieldElement& det) {
  std::vector<FieldElement> a = a_in;
  inverse.assign(n * n, FieldElement{});
  for (std::size_t i = 0; i < n; ++i) inverse[i * n + i] = f.one();
  det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) {
      det = FieldElement{};
      return false;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inverse[pivot * n + j], inverse[col * n + j]);
      }
      det = f.neg(det);
    }
    FieldElement piv = a[col * n + col];
    det = f.mul(det, piv);
    FieldElement piv_inv = f.inv(piv);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = f.mul(a[col * n + j], piv_inv);
      inverse[col * n + j] = f.mul(inverse[col * n + j], piv_inv);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      FieldElement factor = a[row * n + col];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[row * n + j] = f.sub(a[row * n + j], f.mul(factor, a[col * n + j]));
        inverse[row * n + j] = f.sub(inverse[row * n + j], f.mul(factor, inverse[col * n + j]));
      }
    }
  }
  return true;
}

namespace {

std::size_t checked_point_count(const PrimeField& f, std::size_t n, int deg_bound) {
  std::size_t d = n * static_cast<std::size_t>(deg_bound) + 1;
  if (d > f.modulus()) {
    throw InsufficientField("need " + std::to_string(d) + " evaluation points but p = " +
                            std::to_string(f.modulus()));
  }
  return d;
}

struct NonsingularPoint {
  FieldElement y;
  std::vector<FieldElement> matrix;
  std::vector<FieldElement> inverse;
  FieldElement det;
};

/// The first `count` points of 1, 2, ..., p-1, 0 at which M is nonsingular.
/// A nonzero det(M) has at most n * deg_bound roots, so scanning
/// count + n * deg_bound candidates without success proves det(M) = 0.
std::vector<NonsingularPoint> nonsingular_points(const PrimeField& f, const PolyMatrix& m,
                                                 std::size_t count) {
  std::vector<NonsingularPoint> out;
  const std::size_t n = m.size();
  const u64 p = f.modulus();
  const std::size_t limit = count + n * static_cast<std::size_t>(m.deg_bound());
  std::size_t scanned = 0;
  for (u64 k = 1; out.size() < count; ++k) {
    if (k > p) {
      throw InsufficientField("field too small to find " + std::to_string(count) +
                              " nonsingular evaluation points");
    }
    if (scanned >= limit) throw SingularEverywhere();
    ++scanned;
    NonsingularPoint pt;
    pt.y = FieldElement{k % p};
    pt.matrix = m.evaluate(f, pt.y);
    if (dense_inverse(f, pt.matrix, n, pt.inverse, pt.det)) out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

DegreeReport det_poly(const PrimeField& f, const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det_poly: empty matrix");
  const std::size_t d = checked_point_count(f, n, m.deg_bound());
  std::vector<FieldElement> xs(d), ys(d);
  for (std::size_t k = 0; k < d; ++k) {
    xs[k] = FieldElement{(k + 1) % f.modulus()};
    ys[k] = dense_determinant(f, m.evaluate(f, xs[k]), n);
  }
  DegreeReport report;
  report.coeffs = lagrange_interpolate(f, xs, ys);
  report.lowest_degree = report.coeffs.lowest_degree();
  return report;
}

std::vector<std::optional<int>> adjugate_degrees(
    const PrimeField& f, const PolyMatrix& m,
    const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("adjugate_degrees: empty matrix");
  // Adjugate entries have y-degree <= (n-1) * deg_bound.
  const std::size_t count = (n - 1) * static_cast<std::size_t>(m.deg_bound()) + 1;
  checked_point_count(f, n, m.deg_bound());
  auto pts = nonsingular_points(f, m, count);

  std::vector<FieldElement> xs(count);
  for (std::size_t k = 0; k < count; ++k) xs[k] = pts[k].y;
  LagrangeBasis basis(f, xs);

  std::vector<std::optional<int>> out;
  out.reserve(entries.size());
  std::vector<FieldElement> vals(count);
  for (auto [r, c] : entries) {
    for (std::size_t k = 0; k < count; ++k) {
      vals[k] = f.mul(pts[k].det, pts[k].inverse[r * n + c]);
    }
    std::optional<int> deg;
    for (std::size_t d = 0; d < count && !deg; ++d) {
      FieldElement acc{};
      for (std::size_t k = 0; k < count; ++k) acc = f.add(acc, f.mul(vals[k], basis.coeff(k, d)));
      if (!acc.is_zero()) deg = static_cast<int>(d);
    }
    out.push_back(deg);
  }
  return out;
}

std::vector<std::optional<int>> adjugate_degree_matrix(const PrimeField& f,
                                                       const PolyMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> all;
  all.reserve(m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) all.emplace_back(i, j);
  }
  return adjugate_degrees(f, m, all);
}

CoefficientGradients::CoefficientGradients(const PrimeField& f, const PolyMatrix& m,
                                           GradientBackend backend)
    : field_(&f) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("CoefficientGradients: empty matrix");
  const std::size_t count = checked_point_count(f, n, m.deg_bound());
  max_degree_ = static_cast<int>(count) - 1;
  auto pts = nonsingular_points(f, m, count);

  for (const auto& [id, var] : m.variables()) per_point_[id].assign(count, FieldElement{});

  std::vector<FieldElement> dets(count);
  for (std::size_t k = 0; k < count; ++k) {
    const NonsingularPoint& pt = pts[k];
    points_.push_back(pt.y);
    dets[k] = pt.det;
    if (backend == GradientBackend::Adjugate) {
      std::vector<FieldElement> ypow(static_cast<std::size_t>(m.deg_bound()) + 1);
      ypow[0] = f.one();
      for (std::size_t e = 1; e < ypow.size(); ++e) ypow[e] = f.mul(ypow[e - 1], pt.y);
      // d det / d entry(r, c) = adj(M)_{c, r} = det * inv_{c, r}.
      for (const auto& [id, var] : m.variables()) {
        FieldElement acc{};
        for (const VarLink& link : var.links) {
          FieldElement t = f.mul(pt.inverse[link.col * n + link.row],
                                 ypow[static_cast<std::size_t>(link.exponent)]);
          acc = link.sign < 0 ? f.sub(acc, t) : f.add(acc, t);
        }
        per_point_[id][k] = f.mul(acc, pt.det);
      }
    } else {
      Tape tape(f);
      std::vector<VarId> order;
      std::vector<Tape::NodeId> input_node;
      for (const auto& [id, var] : m.variables()) {
        order.push_back(id);
        input_node.push_back(tape.input(var.value));
      }
      std::vector<FieldElement> var_part = m.variable_part(f, pt.y);
      std::vector<Tape::NodeId> entry(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        entry[i] = tape.constant(f.sub(pt.matrix[i], var_part[i]));
      }
      std::size_t idx = 0;
      for (const auto& [id, var] : m.variables()) {
        for (const VarLink& link : var.links) {
          FieldElement scale = f.pow(pt.y, static_cast<u64>(link.exponent));
          if (link.sign < 0) scale = f.neg(scale);
          Tape::NodeId term = tape.mul(input_node[idx], tape.constant(scale));
          std::size_t slot = link.row * n + link.col;
          entry[slot] = tape.add(entry[slot], term);
        }
        ++idx;
      }
      Tape::NodeId det = record_determinant(tape, entry, n);
      Gradient g = reverse_sweep(tape, det);
      for (std::size_t v = 0; v < order.size(); ++v) per_point_[order[v]][k] = g[v];
    }
  }
  basis_.emplace(f, points_);
  det_.coeffs.assign(count, FieldElement{});
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t d = 0; d < count; ++d) {
      det_.coeffs[d] = f.add(det_.coeffs[d], f.mul(dets[k], basis_->coeff(k, d)));
    }
  }
  det_.normalize();
}

FieldElement CoefficientGradients::partial(VarId x, int d, bool prefix) const {
  const PrimeField& f = *field_;
  auto it = per_point_.find(x);
  if (it == per_point_.end() || d < 0) return FieldElement{};
  std::size_t deg = static_cast<std::size_t>(std::min(d, max_degree_));
  if (!prefix && d > max_degree_) return FieldElement{};
  FieldElement acc{};
  for (std::size_t k = 0; k < points_.size(); ++k) {
    FieldElement w = prefix ? basis_->prefix(k, deg) : basis_->coeff(k, deg);
    acc = f.add(acc, f.mul(it->second[k], w));
  }
  return acc;
}

std::map<VarId, FieldElement> CoefficientGradients::gradient(int d, bool prefix) const {
  std::map<VarId, FieldElement> out;
  for (const auto& [id, vals] : per_point_) out[id] = partial(id, d, prefix);
  return out;
}

std::map<VarId, FieldElement> coeff_gradient(const PrimeField& f, const PolyMatrix& m, int d,
                                             bool prefix, GradientBackend backend) {
  return CoefficientGradients(f, m, backend).gradient(d, prefix);
}

ZeroTestVerdict symbolic_nonzero(const PrimeField& f, FieldElement value, u64 degree_bound) {
  if (!value.is_zero()) return {true, 0.0};
  return {false, static_cast<double>(degree_bound) / static_cast<double>(f.modulus())};
}

}  // namespace algraph
