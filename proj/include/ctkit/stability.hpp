#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ctkit/presentation.hpp"
#include "ctkit/rational.hpp"

namespace ctkit {

using Matrix = Eigen::MatrixXcd;

// Grid-sampled matrix-valued function on [0,1]; the finite stand-in for
// projection fields and partial-isometry fields.
struct MatrixPath {
  int n = 0;  // matrix dimension
  std::vector<Rational> grid;
  std::vector<Matrix> entries;

  void validate() const;  // consistent sizes, increasing grid in [0,1]
};

struct RepairReport {
  double input_defect = 0.0;
  double output_defect = 0.0;
  double displacement = 0.0;
};

// Named numerical tolerances with the library defaults.
struct Tolerances {
  double exact_relation = 1e-12;   // residual after the polynomial repairs
  double xxstar_relation = 1e-10;  // residual after the functional repair
  double path_defect = 1e-8;       // V*V / VV* defects along a path
  double projection_check = 1e-10; // accepting an input as a rank-k projection
};

double operator_norm(const Matrix& m);
Matrix hermitian_part(const Matrix& m);

// Spectral rounding of an almost-projection: indicator of eigenvalues above
// 1/2 of the Hermitian part. Requires delta < 1/4; refuses when an
// eigenvalue falls inside the spectral-gap band around 1/2.
Matrix nearest_projection(const Matrix& p, double delta);

struct R1R2Repair {
  std::vector<Matrix> xs;  // last entry distinguished (the coordinate)
  Matrix p;
  RepairReport report;
};

// Largest residual of the R1/R2 relation set: p projection, the off-diagonal
// generators killed by p on the right and fixed on the left, mutually
// orthogonal products and co-orthogonal adjoint products, the distinguished
// generator a positive contraction commuting with p.
double r1r2_defect(const std::vector<Matrix>& xs, const Matrix& p);

// Repairs R1/R2 to exact (numerical) satisfaction: round p, compress each
// generator to the corner pattern, orthogonalize the right supports of the
// off-diagonal generators, clamp the distinguished one to [0,1].
R1R2Repair repair_r1r2(const std::vector<Matrix>& xs, const Matrix& p,
                       double delta);

// A nonnegative scalar function on [0,1] given by a bump descriptor or by
// samples with linear interpolation. nearest_zero supports moving spectrum
// onto the zero set of the function.
struct ScalarFunction {
  std::optional<BumpFunction> bump;
  std::vector<double> sample_grid;    // increasing, within [0,1]
  std::vector<double> sample_values;  // nonnegative

  double eval(double t) const;
  bool identically_zero() const;
  double nearest_zero(double t) const;  // throws DegenerateSpectrum if none
};

struct XXStarRepair {
  Matrix x;
  Matrix y;
  RepairReport report;
};

// Repairs the functional relation x x* = f(y) to exact satisfaction, given
// an approximate instance: cut x down by an approximate unit of the range
// algebra of f(y), retract the spectrum of y below the cutoff onto the zero
// set of f, and rebuild x from the polar isometry of the cutdown.
XXStarRepair repair_xxstar(const Matrix& x, const Matrix& y,
                           const ScalarFunction& f, double delta);

struct Trivialization {
  MatrixPath isometries;  // V with V V* = p, V* V = P(t) at every grid point
  Matrix p;               // the fixed projection (range at the first point)
  double max_vvstar_defect = 0.0;
  double max_vstarv_defect = 0.0;
};

// Conjugates a constant-rank projection path to a fixed projection. Requires
// every sample to be a rank-k projection and adjacent steps closer than 1/2.
Trivialization trivialize_path(const MatrixPath& projections, int rank,
                               const Tolerances& tol = {});

// Joins two trivializing paths across an overlap point t1: left branch kept
// verbatim, right branch twisted by the seam factor U_i(t1) U_j(t1)*. The
// value at t1 is the left branch's, so the seam is exact by construction.
MatrixPath glue(const MatrixPath& left, const MatrixPath& right,
                const Rational& t1);

}  // namespace ctkit
