#include "ctkit/presentation.hpp"

#include <cmath>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

double BumpFunction::eval(double t) const {
  double a = support.left.value.to_double();
  double b = support.right.value.to_double();
  switch (form) {
    case BumpForm::interior:
      if (t <= a || t >= b) return 0.0;
      return 2.0 * std::abs(std::sin(M_PI * (t - a) / (b - a)));
    case BumpForm::left_boundary:
      // support [0,b): ramp from b at the closed end down to 0 at b
      return (t >= a && t < b) ? b - t : 0.0;
    case BumpForm::right_boundary:
      return (t > a && t <= b) ? t - a : 0.0;
    case BumpForm::identity:
      return (t >= 0.0 && t <= 1.0) ? t : 0.0;
  }
  return 0.0;
}

double bump_eval(const BumpFunction& b, const Rational& t) {
  if (t < kZero || t > kOne)
    throw DomainError(ErrorCode::OutOfDomain, "t = " + t.str());
  return b.eval(t);
}

std::string GenSymbol::name() const {
  if (kind == Kind::P) return "P";
  return "X_" + std::to_string(level) + "^" + std::to_string(component);
}

namespace {

std::string bump_name(const GenSymbol& g) {
  return "f_" + std::to_string(g.level) + "^" + std::to_string(g.component);
}

std::string word_text(const Presentation& pres, const Word& w) {
  if (w.zero) return "0";
  std::string s;
  for (const auto& atom : w.atoms) {
    if (!s.empty()) s += " ";
    const GenSymbol& g = pres.generators[size_t(atom.gen)];
    switch (atom.type) {
      case WordAtom::Type::Gen: s += g.name(); break;
      case WordAtom::Type::GenAdj: s += g.name() + "*"; break;
      case WordAtom::Type::BumpOfCoord:
        s += bump_name(g) + "(" + pres.generators.back().name() + ")";
        break;
    }
  }
  return s;
}

Word gen_word(std::initializer_list<WordAtom> atoms) {
  Word w;
  w.atoms = atoms;
  return w;
}

Word zero_word() {
  Word w;
  w.zero = true;
  return w;
}

BumpFunction bump_for_piece(const IntervalPiece& piece) {
  BumpFunction b;
  b.support = piece;
  if (piece.left.closed && piece.right.closed)
    b.form = BumpForm::interior;  // full interval: vanish at both ends
  else if (piece.left.closed)
    b.form = BumpForm::left_boundary;
  else if (piece.right.closed)
    b.form = BumpForm::right_boundary;
  else
    b.form = BumpForm::interior;
  return b;
}

}  // namespace

Presentation emit_presentation(const NestedLayers& layers) {
  validate_nested(layers);
  if (layers.layers.empty() || !layers.layers.front().is_full())
    throw DomainError(ErrorCode::NotFull, "bottom layer must be [0,1]");

  Presentation pres;
  pres.levels = layers;
  pres.n_levels = int(layers.layers.size());
  // Reverse to increasing order: level 1 smallest, level n = [0,1].
  for (int i = pres.n_levels - 1; i >= 0; --i)
    pres.level_sets.push_back(layers.layers[size_t(i)]);
  for (const auto& set : pres.level_sets) {
    if (set.empty())
      throw DomainError(ErrorCode::NotNested, "empty layer has no generators");
    pres.component_counts.push_back(int(set.pieces().size()));
  }

  pres.generators.push_back({GenSymbol::Kind::P, 0, 0});
  pres.bumps.push_back({});
  int n = pres.n_levels;
  for (int i = 1; i <= n; ++i) {
    const auto& comps = components(pres.level_sets[size_t(i - 1)]);
    for (int k = 1; k <= int(comps.size()); ++k) {
      pres.generators.push_back({GenSymbol::Kind::X, i, k});
      if (i == n) {
        BumpFunction ident;
        ident.support = make_piece(kZero, true, kOne, true);
        ident.form = BumpForm::identity;
        pres.bumps.push_back(ident);
      } else {
        pres.bumps.push_back(bump_for_piece(comps[size_t(k - 1)]));
      }
    }
  }

  int coord = int(pres.generators.size()) - 1;  // the distinguished X_n
  std::vector<int> offdiag;                     // generators with level < n
  for (int g = 1; g < int(pres.generators.size()); ++g)
    if (pres.generators[size_t(g)].level < n) offdiag.push_back(g);

  auto add = [&pres](Relation r) {
    r.text = (r.kind == Relation::Kind::Equal)
                 ? word_text(pres, r.lhs) + " = " + word_text(pres, r.rhs)
                 : r.text;
    pres.relations.push_back(std::move(r));
  };

  using T = WordAtom::Type;
  // R1: P is a projection; only the distinguished norm bound is kept, the
  // remaining norm relations being redundant.
  add({RelationFamily::R1, Relation::Kind::Equal, gen_word({{T::GenAdj, 0}}),
       gen_word({{T::Gen, 0}}), 0.0, ""});
  add({RelationFamily::R1, Relation::Kind::Equal,
       gen_word({{T::Gen, 0}, {T::Gen, 0}}), gen_word({{T::Gen, 0}}), 0.0, ""});
  {
    Relation r{RelationFamily::R1, Relation::Kind::NormBound,
               gen_word({{T::Gen, coord}}), {}, 1.0, ""};
    r.text = "||" + pres.generators[size_t(coord)].name() + "|| <= 1";
    pres.relations.push_back(std::move(r));
  }
  // R2: orthogonality and P-module structure.
  for (int a : offdiag)
    for (int b : offdiag)
      add({RelationFamily::R2, Relation::Kind::Equal,
           gen_word({{T::Gen, a}, {T::Gen, b}}), zero_word(), 0.0, ""});
  for (int a : offdiag)
    for (int b : offdiag)
      if (a != b)
        add({RelationFamily::R2, Relation::Kind::Equal,
             gen_word({{T::Gen, a}, {T::GenAdj, b}}), zero_word(), 0.0, ""});
  for (int a : offdiag) {
    add({RelationFamily::R2, Relation::Kind::Equal,
         gen_word({{T::Gen, 0}, {T::Gen, a}}), gen_word({{T::Gen, a}}), 0.0, ""});
    add({RelationFamily::R2, Relation::Kind::Equal,
         gen_word({{T::Gen, a}, {T::Gen, 0}}), zero_word(), 0.0, ""});
  }
  add({RelationFamily::R2, Relation::Kind::Equal,
       gen_word({{T::Gen, 0}, {T::Gen, coord}}), gen_word({{T::Gen, coord}}),
       0.0, ""});
  add({RelationFamily::R2, Relation::Kind::Equal,
       gen_word({{T::Gen, coord}, {T::Gen, 0}}), gen_word({{T::Gen, coord}}),
       0.0, ""});
  {
    Relation r{RelationFamily::R2, Relation::Kind::PositiveContraction,
               gen_word({{T::Gen, coord}}), {}, 1.0, ""};
    r.text = "0 <= " + pres.generators[size_t(coord)].name() + " <= 1";
    pres.relations.push_back(std::move(r));
  }
  // R3: each off-diagonal generator squares to its bump of the coordinate.
  for (int a : offdiag)
    add({RelationFamily::R3, Relation::Kind::Equal,
         gen_word({{T::Gen, a}, {T::GenAdj, a}}),
         gen_word({{T::BumpOfCoord, a}}), 0.0, ""});

  return pres;
}

int fiber_dimension(const Presentation& pres, const Rational& alpha) {
  if (alpha < kZero || alpha > kOne)
    throw DomainError(ErrorCode::OutOfDomain, "alpha = " + alpha.str());
  int d = 0;
  for (const auto& set : pres.level_sets)
    if (set.contains_point(alpha)) ++d;
  return d;
}

FiberRep fiber_representation(const Presentation& pres, const Rational& alpha) {
  FiberRep rep;
  rep.dim = fiber_dimension(pres, alpha);
  int d = rep.dim;
  int n = pres.n_levels;
  int i0 = n - d + 1;  // lowest alive level
  rep.p = Eigen::MatrixXcd::Zero(d, d);
  rep.p(d - 1, d - 1) = 1.0;
  for (size_t g = 0; g < pres.generators.size(); ++g) {
    const GenSymbol& sym = pres.generators[g];
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
    if (sym.kind == GenSymbol::Kind::P) {
      M = rep.p;
    } else if (sym.level >= i0) {
      const auto& comps = components(pres.level_sets[size_t(sym.level - 1)]);
      const IntervalPiece& piece = comps[size_t(sym.component - 1)];
      if (piece.contains(alpha)) {
        int row = sym.level - i0;  // 0-based position among alive levels
        // The distinguished generator carries the coordinate alpha itself;
        // every other generator carries the square root of its bump, as in
        // the irreducible fiber construction.
        double v = (sym.level == n) ? alpha.to_double()
                                    : std::sqrt(pres.bumps[g].eval(alpha.to_double()));
        M(d - 1, row) = v;
      }
    }
    rep.gens.push_back(std::move(M));
  }
  return rep;
}

namespace {

double op_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd eval_word(const Presentation& pres, const FiberRep& rep,
                           const Word& w) {
  int d = rep.dim;
  if (w.zero) return Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& atom : w.atoms) {
    switch (atom.type) {
      case WordAtom::Type::Gen:
        acc = acc * rep.gens[size_t(atom.gen)];
        break;
      case WordAtom::Type::GenAdj:
        acc = acc * rep.gens[size_t(atom.gen)].adjoint();
        break;
      case WordAtom::Type::BumpOfCoord: {
        // Functional calculus on the corner of the coordinate generator:
        // its P-corner scalar is the spectrum parameter.
        const Eigen::MatrixXcd& xn = rep.gens.back();
        double s = xn(d - 1, d - 1).real();
        acc = acc * (pres.bumps[size_t(atom.gen)].eval(s) * rep.p);
        break;
      }
    }
  }
  return acc;
}

}  // namespace

double relation_residual(const Presentation& pres, const FiberRep& rep,
                         const Relation& rel) {
  switch (rel.kind) {
    case Relation::Kind::Equal:
      return op_norm(eval_word(pres, rep, rel.lhs) -
                     eval_word(pres, rep, rel.rhs));
    case Relation::Kind::NormBound:
      return std::max(0.0, op_norm(eval_word(pres, rep, rel.lhs)) - rel.bound);
    case Relation::Kind::PositiveContraction: {
      Eigen::MatrixXcd m = eval_word(pres, rep, rel.lhs);
      double herm = op_norm(m - m.adjoint());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          (m + m.adjoint()) / 2.0);
      double lo = es.eigenvalues().minCoeff();
      double hi = es.eigenvalues().maxCoeff();
      return std::max({herm, -lo, hi - rel.bound, 0.0});
    }
  }
  return 0.0;
}

double max_relation_residual(const Presentation& pres, const FiberRep& rep) {
  double worst = 0.0;
  for (const auto& rel : pres.relations)
    worst = std::max(worst, relation_residual(pres, rep, rel));
  return worst;
}

BlockModel model_description(const NestedLayers& layers) {
  validate_nested(layers);
  if (layers.layers.empty() || !layers.layers.front().is_full())
    throw DomainError(ErrorCode::NotFull, "bottom layer must be [0,1]");
  BlockModel model;
  model.n = int(layers.layers.size());
  for (int i = model.n - 1; i >= 0; --i)
    model.level_sets.push_back(layers.layers[size_t(i)]);
  return model;
}

std::string render_text(const Presentation& pres) {
  std::string out;
  out += "levels: " + std::to_string(pres.n_levels) + "\n";
  for (int i = 1; i <= pres.n_levels; ++i)
    out += "A_" + std::to_string(i) + " = " +
           pres.level_sets[size_t(i - 1)].str() + "\n";
  out += "generators: " + std::to_string(pres.generators.size()) + "\n";
  for (size_t g = 0; g < pres.generators.size(); ++g) {
    const GenSymbol& sym = pres.generators[g];
    out += sym.name();
    if (sym.kind == GenSymbol::Kind::X) {
      const BumpFunction& b = pres.bumps[g];
      const char* form = "";
      switch (b.form) {
        case BumpForm::interior: form = "interior"; break;
        case BumpForm::left_boundary: form = "left_boundary"; break;
        case BumpForm::right_boundary: form = "right_boundary"; break;
        case BumpForm::identity: form = "identity"; break;
      }
      out += std::string("  bump=") + form + " support=" + b.support.str();
    }
    out += "\n";
  }
  out += "relations: " + std::to_string(pres.relations.size()) + "\n";
  for (const auto& rel : pres.relations) {
    const char* fam = rel.family == RelationFamily::R1
                          ? "R1"
                          : (rel.family == RelationFamily::R2 ? "R2" : "R3");
    out += std::string(fam) + ": " + rel.text + "\n";
  }
  return out;
}

std::string render_text(const BlockModel& model) {
  std::string out;
  for (int i = 1; i <= model.n; ++i) {
    for (int j = 1; j <= model.n; ++j) {
      if (j > 1) out += "  ";
      if (i == model.n && j == model.n)
        out += "C[0,1]";
      else
        out += "C0(A_" + std::to_string(model.entry_level(i, j)) + ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace ctkit
