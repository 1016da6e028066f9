#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "monoloc/formallyreal.hpp"
#include "monoloc/latticeorder.hpp"
#include "monoloc/monoid.hpp"

namespace monoloc {

enum class InstanceKind { finite, lattice, open_cone, lattice_group, rational_function };
const char* to_string(InstanceKind k);

/// Parsed instance file. Grammar (one item per line, '#' starts a comment):
///   kind: finite | lattice | open-cone | lattice-group | rational-function
///   name: <text>            dim: <n>        scalars: integer | rational
///   unit: <element>         field: Q | Q(x)
///   [elements]  names of the finite carrier, 0 first, on one line
///   [add]       finite addition table, one row of names per line
///   [mu]        finite: one row of names per line; otherwise "i j : v_1 ... v_dim" with 1-based i, j
///   [generators]  lattice generators, one integer vector per line
///   [cone]      conic generators of the closed cone of an open-cone carrier
///   [open]      facet normals of that cone whose inequality is strict
///   [functions] rational functions, one per line
struct Instance {
  InstanceKind kind = InstanceKind::finite;
  std::string name;
  std::shared_ptr<const MonoidInstance> carrier;  // every kind except rational-function
  std::optional<BiadditiveOp> op;                 // present when [mu] is given
  std::optional<MonoidElement> unit;
  std::optional<FRingCandidate> fring;            // lattice-group
  std::string field;                              // rational-function
  std::vector<RationalFunction> functions;

  /// Throws InputError when the instance has no operation.
  const BiadditiveOp& require_op() const;
};

/// Diagnostics carry "<source>:<line>:".
Instance parse_instance(std::string_view text, const std::string& source = "<input>");
Instance load_instance(const std::string& path);

}  // namespace monoloc
