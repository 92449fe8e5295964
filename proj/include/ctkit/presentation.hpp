#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ctkit/dimension_functions.hpp"
#include "ctkit/interval_topology.hpp"

namespace ctkit {

// The positive scalar function attached to one connected component of a
// level set. The interior form is |e^{2*pi*i*(t-a)/(b-a)} - 1|, computed as
// 2*|sin(pi*(t-a)/(b-a))|; the boundary forms are the linear ramps a-t and
// t-b on the half-open end pieces; identity is the coordinate function of
// the distinguished generator.
enum class BumpForm { interior, left_boundary, right_boundary, identity };

struct BumpFunction {
  IntervalPiece support;
  BumpForm form = BumpForm::interior;

  double eval(double t) const;
  double eval(const Rational& t) const { return eval(t.to_double()); }
};

double bump_eval(const BumpFunction& b, const Rational& t);

struct GenSymbol {
  enum class Kind { P, X };
  Kind kind = Kind::P;
  int level = 0;      // 1..n, increasing-level indexing (level n distinguished)
  int component = 0;  // 1..c_i within the level

  std::string name() const;
};

enum class RelationFamily { R1, R2, R3 };

// A word is a product of generator symbols, their adjoints, and scalar
// functions of the distinguished generator. Relations compare two words, or
// constrain one word by a norm bound / positivity interval.
struct WordAtom {
  enum class Type { Gen, GenAdj, BumpOfCoord };
  Type type = Type::Gen;
  int gen = 0;  // index into Presentation::generators
};

struct Word {
  std::vector<WordAtom> atoms;
  bool zero = false;  // the zero element, used as a right-hand side
};

struct Relation {
  enum class Kind { Equal, NormBound, PositiveContraction };
  RelationFamily family = RelationFamily::R1;
  Kind kind = Kind::Equal;
  Word lhs;
  Word rhs;
  double bound = 0.0;  // for NormBound
  std::string text;    // deterministic rendering, one line
};

// Finite presentation of the special building block attached to a nested
// layer chain: one abelian projection P, one generator per connected
// component of each level, relations in families R1/R2/R3.
struct Presentation {
  int n_levels = 0;
  // Levels in increasing order: sets[0] smallest, sets[n-1] = [0,1].
  std::vector<OpenSet> level_sets;
  std::vector<int> component_counts;
  std::vector<GenSymbol> generators;  // generators[0] is P
  std::vector<BumpFunction> bumps;    // parallel to generators; slot 0 unused
  std::vector<Relation> relations;
  NestedLayers levels;  // provenance: the superlevel chain as given
};

// Requires a nested chain whose first (largest) layer is all of [0,1].
Presentation emit_presentation(const NestedLayers& layers);

// Dimension of the irreducible fiber at alpha: the number of levels whose
// set contains alpha. Equals the source dimension function there.
int fiber_dimension(const Presentation& pres, const Rational& alpha);

// The d x d matrices of the fiber at alpha, with d = fiber_dimension. Dead
// generators (alpha outside their component) are zero; the distinguished
// generator carries the spectrum coordinate itself.
struct FiberRep {
  int dim = 0;
  Eigen::MatrixXcd p;
  std::vector<Eigen::MatrixXcd> gens;  // parallel to Presentation::generators
};

FiberRep fiber_representation(const Presentation& pres, const Rational& alpha);

// Largest residual of one relation in a fiber representation.
double relation_residual(const Presentation& pres, const FiberRep& rep,
                         const Relation& rel);
// Max over all relations.
double max_relation_residual(const Presentation& pres, const FiberRep& rep);

// The n x n matrix pattern of the concrete model: entry (i,j) is the
// level-set index min(i,j), with the (n,n) corner the full interval.
struct BlockModel {
  int n = 0;
  std::vector<OpenSet> level_sets;  // increasing order, as in Presentation
  int entry_level(int i, int j) const { return std::min(i, j); }  // 1-based
  const OpenSet& entry(int i, int j) const { return level_sets[size_t(entry_level(i, j)) - 1]; }
};

BlockModel model_description(const NestedLayers& layers);

std::string render_text(const Presentation& pres);
std::string render_text(const BlockModel& model);

}  // namespace ctkit
