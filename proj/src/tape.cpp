#include "algraph/tape.hpp"

#include <stdexcept>
#include <utility>

#include "algraph/errors.hpp"

namespace algraph {

Tape::NodeId Tape::push(Node node) {
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size() - 1);
}

Tape::NodeId Tape::input(FieldElement value) {
  NodeId id = push({Op::Input, 0, 0, value});
  inputs_.push_back(id);
  return id;
}

Tape::NodeId Tape::constant(FieldElement value) { return push({Op::Const, 0, 0, value}); }

Tape::NodeId Tape::add(NodeId a, NodeId b) { return record(Op::Add, a, b); }
Tape::NodeId Tape::sub(NodeId a, NodeId b) { return record(Op::Sub, a, b); }
Tape::NodeId Tape::mul(NodeId a, NodeId b) { return record(Op::Mul, a, b); }
Tape::NodeId Tape::div(NodeId a, NodeId b) { return record(Op::Div, a, b); }
Tape::NodeId Tape::neg(NodeId a) { return record(Op::Neg, a); }

Tape::NodeId Tape::record(Op op, NodeId lhs, NodeId rhs, FieldElement leaf_value) {
  const PrimeField& f = *field_;
  auto check = [&](NodeId id) {
    if (id >= nodes_.size()) throw std::out_of_range("tape argument refers to a later node");
  };
  switch (op) {
    case Op::Input:
      return input(leaf_value);
    case Op::Const:
      return constant(leaf_value);
    case Op::Neg:
      check(lhs);
      ++arithmetic_ops_;
      return push({op, lhs, 0, f.neg(nodes_[lhs].value)});
    default:
      break;
  }
  check(lhs);
  check(rhs);
  FieldElement a = nodes_[lhs].value;
  FieldElement b = nodes_[rhs].value;
  FieldElement out;
  switch (op) {
    case Op::Add: out = f.add(a, b); break;
    case Op::Sub: out = f.sub(a, b); break;
    case Op::Mul: out = f.mul(a, b); break;
    case Op::Div:
      if (b.is_zero()) throw DivisionByZero();
      out = f.div(a, b);
      break;
    default: throw std::logic_error("unreachable tape op");
  }
  ++arithmetic_ops_;
  return push({op, lhs, rhs, out});
}

bool Tape::replay_consistent() const {
  const PrimeField& f = *field_;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const Node& n = nodes_[k];
    if (n.op != Op::Input && n.op != Op::Const) {
      if (n.lhs >= k || (n.op != Op::Neg && n.rhs >= k)) return false;
    }
    FieldElement expect;
    switch (n.op) {
      case Op::Input:
      case Op::Const: continue;
      case Op::Add: expect = f.add(nodes_[n.lhs].value, nodes_[n.rhs].value); break;
      case Op::Sub: expect = f.sub(nodes_[n.lhs].value, nodes_[n.rhs].value); break;
      case Op::Mul: expect = f.mul(nodes_[n.lhs].value, nodes_[n.rhs].value); break;
      case Op::Div: expect = f.div(nodes_[n.lhs].value, nodes_[n.rhs].value); break;
      case Op::Neg: expect = f.neg(nodes_[n.lhs].value); break;
    }
    if (expect != n.value) return false;
  }
  return true;
}

Gradient reverse_sweep(const Tape& tape, Tape::NodeId output) {
  const PrimeField& f = tape.field();
  auto nodes = tape.nodes();
  if (output >= nodes.size()) throw std::out_of_range("reverse_sweep: bad output node");

  std::vector<FieldElement> adjoint(output + 1, FieldElement{});
  adjoint[output] = f.one();
  std::size_t ops = 0;

  for (std::size_t k = output + 1; k-- > 0;) {
    const FieldElement g = adjoint[k];
    if (g.is_zero()) continue;
    const Tape::Node& n = nodes[k];
    switch (n.op) {
      case Tape::Op::Input:
      case Tape::Op::Const:
        break;
      case Tape::Op::Add:
        adjoint[n.lhs] = f.add(adjoint[n.lhs], g);
        adjoint[n.rhs] = f.add(adjoint[n.rhs], g);
        ops += 2;
        break;
      case Tape::Op::Sub:
        adjoint[n.lhs] = f.add(adjoint[n.lhs], g);
        adjoint[n.rhs] = f.sub(adjoint[n.rhs], g);
        ops += 2;
        break;
      case Tape::Op::Mul:
        adjoint[n.lhs] = f.add(adjoint[n.lhs], f.mul(g, nodes[n.rhs].value));
        adjoint[n.rhs] = f.add(adjoint[n.rhs], f.mul(g, nodes[n.lhs].value));
        ops += 4;
        break;
      case Tape::Op::Div: {
        // out = a / b: d/da = 1/b, d/db = -out/b.
        FieldElement q = f.div(g, nodes[n.rhs].value);
        adjoint[n.lhs] = f.add(adjoint[n.lhs], q);
        adjoint[n.rhs] = f.sub(adjoint[n.rhs], f.mul(q, n.value));
        ops += 4;
        break;
      }
      case Tape::Op::Neg:
        adjoint[n.lhs] = f.sub(adjoint[n.lhs], g);
        ops += 1;
        break;
    }
  }

  Gradient grad;
  grad.sweep_ops = ops;
  for (Tape::NodeId id : tape.inputs()) {
    grad.inputs.push_back(id);
    grad.partials.push_back(id <= output ? adjoint[id] : FieldElement{});
  }
  return grad;
}

Tape::NodeId record_determinant(Tape& tape, std::span<const Tape::NodeId> matrix,
                                std::size_t n) {
  if (matrix.size() != n * n) throw std::invalid_argument("record_determinant: size mismatch");
  if (n == 0) return tape.constant(tape.field().one());
  std::vector<Tape::NodeId> a(matrix.begin(), matrix.end());
  bool negate = false;
  Tape::NodeId det = 0;
  bool have_det = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && tape.value(a[pivot * n + col]).is_zero()) ++pivot;
    if (pivot == n) return tape.constant(FieldElement{});
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      negate = !negate;
    }
    Tape::NodeId piv = a[col * n + col];
    det = have_det ? tape.mul(det, piv) : piv;
    have_det = true;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (tape.value(a[row * n + col]).is_zero() &&
          tape.nodes()[a[row * n + col]].op == Tape::Op::Const) {
        continue;  // structurally zero, nothing to eliminate
      }
      Tape::NodeId factor = tape.div(a[row * n + col], piv);
      for (std::size_t j = col + 1; j < n; ++j) {
        a[row * n + j] = tape.sub(a[row * n + j], tape.mul(factor, a[col * n + j]));
      }
    }
  }
  return negate ? tape.neg(det) : det;
}

}  // namespace algraph
