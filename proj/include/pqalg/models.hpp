#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pqalg/element.hpp"
#include "pqalg/matrix.hpp"
#include "pqalg/presentation.hpp"

namespace pqalg {

enum class AmbientUnit { Included, Excluded };
enum class WType { W3, W4 };

std::string wtype_name(WType w);

struct LambdaSpec {
  int m;
  Rational lambda;
  // Throws ParameterError for m < 2 or lambda = 1.
  void validate() const;
  bool degenerate() const { return is_zero(lambda); }
};

// Z_n summand (matrix form with the ambient unit) plus a W3 or W4 summand.
struct ZPlusW {
  Presentation z;
  WType w;
};

using ModelIntent = std::variant<Presentation, LambdaSpec, WType, ZPlusW>;

struct ModelPair {
  RationalMatrix p;
  RationalMatrix q;
  ModelIntent intended;
  bool contains_ambient_unit = false;
  std::string label;

  std::size_t size() const { return p.rows(); }
};

struct RelationCheck {
  std::string name;
  bool pass;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
  std::vector<std::string> failures() const;
};

// Block idempotents p = [I B; 0 0], q = [0 0; C I] realising Z_n. With the
// unit excluded an extra zero row/column is appended and coupled to both
// blocks through all-ones columns, so the ambient identity leaves the span.
ModelPair build_zn_pair(int n, AmbientUnit unit, ZnVanishing vanishing = ZnVanishing::QP);
ModelPair build_example_z3();
ModelPair build_w_pair(WType w);
ModelPair build_family_pair(Family f, int m);
ModelPair build_z_plus_w_pair(int n, ZnVanishing vanishing, WType w);
// The 2x2 cell with PQP = lambda P.
RationalMatrix lambda_cell_p();
RationalMatrix lambda_cell_q(const Rational& lambda);
// Excluded appends a zero summand so the ambient identity is not in the
// algebra; Included is the bare cell (plus Z tail for m > 2).
ModelPair build_lambda_pair(const LambdaSpec& spec, AmbientUnit unit = AmbientUnit::Excluded);

// Image of an alternating word.
RationalMatrix word_image(const ModelPair& pair, const Word& w);
RationalMatrix represent(const Element& a, const ModelPair& pair);

RelationReport verify_relations(const ModelPair& pair);

}  // namespace pqalg
