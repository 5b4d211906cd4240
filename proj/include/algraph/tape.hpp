#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "algraph/field.hpp"

namespace algraph {

/// Straight-line program over Z_p, recorded eagerly: every node stores its
/// forward value at the point it was recorded at. A reverse sweep over the
/// tape yields the gradient of any node with respect to all Input nodes.
///
/// The derivative is that of the traced program. When a caller chooses
/// pivots from the recorded values (as record_determinant does), the trace
/// is a valid straight-line program in a neighbourhood of the recorded point,
/// so the sweep gives the true partials there.
class Tape {
 public:
  using NodeId = std::uint32_t;

  enum class Op : std::uint8_t { Input, Const, Add, Sub, Mul, Div, Neg };

  struct Node {
    Op op;
    NodeId lhs;
    NodeId rhs;
    FieldElement value;
  };

  explicit Tape(const PrimeField& field) : field_(&field) {}

  const PrimeField& field() const { return *field_; }

  NodeId input(FieldElement value);
  NodeId constant(FieldElement value);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);
  /// Throws DivisionByZero if b's value is zero.
  NodeId div(NodeId a, NodeId b);
  NodeId neg(NodeId a);

  /// Generic entry point; `rhs` is ignored for unary ops and leaves.
  NodeId record(Op op, NodeId lhs, NodeId rhs = 0, FieldElement leaf_value = {});

  FieldElement value(NodeId id) const { return nodes_[id].value; }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const NodeId> inputs() const { return inputs_; }
  std::size_t size() const { return nodes_.size(); }

  /// Number of arithmetic nodes (Add/Sub/Mul/Div/Neg) on the tape.
  std::size_t arithmetic_ops() const { return arithmetic_ops_; }

  /// Re-evaluates every node from its arguments and checks the stored values.
  bool replay_consistent() const;

 private:
  NodeId push(Node node);

  const PrimeField* field_;
  std::vector<Node> nodes_;
  std::vector<NodeId> inputs_;
  std::size_t arithmetic_ops_ = 0;
};

/// Partial derivatives of one output with respect to every Input node, in
/// the order the inputs were recorded.
struct Gradient {
  std::vector<Tape::NodeId> inputs;
  std::vector<FieldElement> partials;
  /// Field operations performed by the sweep.
  std::size_t sweep_ops = 0;

  FieldElement operator[](std::size_t input_index) const { return partials[input_index]; }
};

/// One reverse pass from `output`. Adjoint rules: Add -> (1, 1), Sub -> (1, -1),
/// Mul(a, b) -> (b, a), Div(a, b) -> (1/b, -a/b^2), Neg -> -1.
Gradient reverse_sweep(const Tape& tape, Tape::NodeId output);

/// Records Gaussian elimination of the row-major n x n matrix of nodes,
/// pivoting on the first row with a nonzero recorded value. Returns a node
/// holding det; a constant zero if the recorded matrix is singular.
Tape::NodeId record_determinant(Tape& tape, std::span<const Tape::NodeId> matrix,
                                std::size_t n);

}  // namespace algraph
