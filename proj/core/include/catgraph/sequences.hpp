#pragma once

#include <catgraph/numbers.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace catgraph {

// A named or explicit integer sequence. These feed the feasibility gate,
// the axiom checker and the rule-inference engine, and can be materialized
// term by term through sequence_values().
//
// Triangle extractors return the raw triangle entries; nothing is prepended.
// The internal-triangles family is the modeling sequence 1, t(4), t(5), ...
// (the leading 1 is the single root the construction starts from).
// Diagonals are indexed from i = 0: diagonal i yields C(i+k, k) for
// k = 0, 1, ..., so i = 0 is the Catalan diagonal.
struct SequenceSpec {
  enum class Kind {
    Catalan,
    Fuss,              // param = k >= 1
    TriangleRow,       // param = n (finite: n + 1 terms)
    TriangleColumn,    // param = k
    TriangleDiagonal,  // param = i
    InternalTriangles,
    SuperCatalanRow,   // param = m
    Explicit,
  };

  Kind kind = Kind::Catalan;
  Nat param = 0;
  std::vector<Nat> values;  // Kind::Explicit only; non-empty

  static SequenceSpec catalan();
  static SequenceSpec fuss(Nat k);
  static SequenceSpec triangle_row(Nat n);
  static SequenceSpec triangle_column(Nat k);
  static SequenceSpec triangle_diagonal(Nat i);
  static SequenceSpec internal_triangles();
  static SequenceSpec super_catalan_row(Nat m);
  static SequenceSpec explicit_list(std::vector<Nat> values);

  // "catalan", "fuss:2", "triangle-row:4", "1,4,14,48", ...
  std::string name() const;

  // Number of terms the sequence can supply, when finite.
  std::optional<std::size_t> max_terms() const;
};

// First `count` terms (count >= 1). Throws std::invalid_argument when the
// parameters are out of range for the underlying family.
std::vector<Nat> sequence_values(const SequenceSpec& spec, std::size_t count);

// Accepts a family name ("catalan", "internal-triangles", "fuss:K",
// "triangle-row:N", "triangle-column:K", "triangle-diagonal:I",
// "super-catalan-row:M"), an inline comma list ("1,4,14,48"), or "@path"
// naming a file with one integer per line.
SequenceSpec parse_sequence_spec(const std::string& text);

}  // namespace catgraph
