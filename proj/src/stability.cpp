#include "ctkit/stability.hpp"

#include <algorithm>
#include <cmath>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {
const Rational kZero(0);
const Rational kOne(1);

using ESolver = Eigen::SelfAdjointEigenSolver<Matrix>;

Matrix apply_spectral(const ESolver& es, const std::vector<double>& mapped) {
  Eigen::VectorXd d(es.eigenvalues().size());
  for (int i = 0; i < d.size(); ++i) d(i) = mapped[size_t(i)];
  return es.eigenvectors() * d.asDiagonal() *
         es.eigenvectors().adjoint();
}

// Projection onto the eigenspaces of a Hermitian psd matrix above tol.
Matrix support_projection(const Matrix& h, double tol) {
  ESolver es(h);
  Eigen::VectorXd d(es.eigenvalues().size());
  for (int i = 0; i < d.size(); ++i)
    d(i) = es.eigenvalues()(i) > tol ? 1.0 : 0.0;
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

void MatrixPath::validate() const {
  if (grid.empty() || grid.size() != entries.size())
    throw std::invalid_argument("path needs one matrix per grid point");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < kZero || grid[i] > kOne)
      throw std::invalid_argument("grid point outside [0,1]");
    if (i + 1 < grid.size() && !(grid[i] < grid[i + 1]))
      throw std::invalid_argument("grid must be strictly increasing");
    if (entries[i].rows() != n || entries[i].cols() != n)
      throw std::invalid_argument("matrix dimension mismatch on path");
  }
}

Matrix nearest_projection(const Matrix& p, double delta) {
  if (!(delta > 0.0) || delta >= 0.25)
    throw DomainError(ErrorCode::InvalidTolerance,
                      "delta must lie in (0, 1/4)");
  ESolver es(hermitian_part(p));
  double margin = std::sqrt(std::max(0.0, 1.0 - 4.0 * delta)) / 2.0;
  std::vector<double> mapped;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double lam = es.eigenvalues()(i);
    if (std::abs(lam - 0.5) < margin)
      throw DomainError(ErrorCode::NoSpectralGap,
                        "eigenvalue " + std::to_string(lam) +
                            " inside the gap band around 1/2");
    mapped.push_back(lam > 0.5 ? 1.0 : 0.0);
  }
  return apply_spectral(es, mapped);
}

double r1r2_defect(const std::vector<Matrix>& xs, const Matrix& p) {
  size_t n = xs.size();
  double worst = std::max(operator_norm(p - p.adjoint()),
                          operator_norm(p * p - p));
  for (size_t i = 0; i + 1 < n; ++i) {
    worst = std::max(worst, operator_norm(p * xs[i] - xs[i]));
    worst = std::max(worst, operator_norm(xs[i] * p));
    for (size_t j = 0; j + 1 < n; ++j) {
      worst = std::max(worst, operator_norm(xs[i] * xs[j]));
      if (i != j)
        worst = std::max(worst, operator_norm(xs[i] * xs[j].adjoint()));
    }
  }
  const Matrix& xn = xs.back();
  worst = std::max(worst, operator_norm(p * xn - xn));
  worst = std::max(worst, operator_norm(xn * p - xn));
  worst = std::max(worst, operator_norm(xn - xn.adjoint()));
  ESolver es(hermitian_part(xn));
  if (es.eigenvalues().size() > 0) {
    worst = std::max(worst, std::max(0.0, -es.eigenvalues().minCoeff()));
    worst = std::max(worst, std::max(0.0, es.eigenvalues().maxCoeff() - 1.0));
  }
  return worst;
}

R1R2Repair repair_r1r2(const std::vector<Matrix>& xs, const Matrix& p,
                       double delta) {
  if (xs.empty()) throw std::invalid_argument("need at least one generator");
  if (p.rows() != p.cols()) throw std::invalid_argument("p must be square");
  for (const auto& x : xs)
    if (x.rows() != p.rows() || x.cols() != p.cols())
      throw std::invalid_argument("generator dimensions must match p");
  R1R2Repair out;
  out.report.input_defect = r1r2_defect(xs, p);
  out.p = nearest_projection(p, delta);
  Matrix id = Matrix::Identity(p.rows(), p.cols());
  Matrix comp = id - out.p;

  // Corner compression, then sequential right-support orthogonalization so
  // the adjoint cross products vanish exactly, not just within O(delta).
  Matrix occupied = Matrix::Zero(p.rows(), p.cols());
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    Matrix z = out.p * xs[i] * comp;
    z = z * (id - occupied);
    double top = operator_norm(z);
    Matrix s =
        support_projection(z.adjoint() * z, std::max(1e-20, 1e-12 * top * top));
    z = z * s;
    occupied += s;
    out.xs.push_back(std::move(z));
  }
  // Distinguished generator: Hermitian corner compression clamped to [0,1].
  ESolver es(hermitian_part(out.p * xs.back() * out.p));
  std::vector<double> clamped;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    clamped.push_back(std::clamp(es.eigenvalues()(i), 0.0, 1.0));
  out.xs.push_back(apply_spectral(es, clamped));

  out.report.output_defect = r1r2_defect(out.xs, out.p);
  double disp = operator_norm(p - out.p);
  for (size_t i = 0; i < xs.size(); ++i)
    disp = std::max(disp, operator_norm(xs[i] - out.xs[i]));
  out.report.displacement = disp;
  return out;
}

double ScalarFunction::eval(double t) const {
  if (bump) return bump->eval(t);
  if (sample_grid.empty()) return 0.0;
  if (t <= sample_grid.front()) return sample_values.front();
  if (t >= sample_grid.back()) return sample_values.back();
  auto it = std::lower_bound(sample_grid.begin(), sample_grid.end(), t);
  size_t hi = size_t(it - sample_grid.begin());
  size_t lo = hi - 1;
  double w = (t - sample_grid[lo]) / (sample_grid[hi] - sample_grid[lo]);
  return (1.0 - w) * sample_values[lo] + w * sample_values[hi];
}

bool ScalarFunction::identically_zero() const {
  if (bump) return false;  // bump forms are positive somewhere by shape
  for (double v : sample_values)
    if (v > 0.0) return false;
  return true;
}

double ScalarFunction::nearest_zero(double t) const {
  if (eval(t) == 0.0) return t;
  if (bump) {
    double a = bump->support.left.value.to_double();
    double b = bump->support.right.value.to_double();
    switch (bump->form) {
      case BumpForm::interior:
        return (t - a <= b - t) ? a : b;
      case BumpForm::left_boundary:
        return b;  // zero set is [b,1]
      case BumpForm::right_boundary:
        return a;  // zero set is [0,a]
      case BumpForm::identity:
        return 0.0;
    }
  }
  double best = -1.0, dist = 2.0;
  for (size_t i = 0; i < sample_grid.size(); ++i)
    if (sample_values[i] <= 0.0 && std::abs(sample_grid[i] - t) < dist) {
      dist = std::abs(sample_grid[i] - t);
      best = sample_grid[i];
    }
  if (best < 0.0)
    throw DomainError(ErrorCode::DegenerateSpectrum,
                      "sampled function has no zero to retract onto");
  return best;
}

XXStarRepair repair_xxstar(const Matrix& x, const Matrix& y,
                           const ScalarFunction& f, double delta) {
  if (!(delta > 0.0))
    throw DomainError(ErrorCode::InvalidTolerance, "delta must be positive");
  if (y.rows() != y.cols() || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("x and y must be square of equal size");
  XXStarRepair out;
  ESolver ey(hermitian_part(y));

  auto f_of = [&](const std::vector<double>& lams) {
    std::vector<double> vals;
    for (double l : lams) vals.push_back(std::max(0.0, f.eval(l)));
    return vals;
  };
  std::vector<double> lam(ey.eigenvalues().data(),
                          ey.eigenvalues().data() + ey.eigenvalues().size());
  std::vector<double> fy = f_of(lam);
  Matrix fy_mat = apply_spectral(ey, fy);
  out.report.input_defect = operator_norm(x * x.adjoint() - fy_mat);

  if (f.identically_zero()) {
    out.x = Matrix::Zero(x.rows(), x.cols());
    out.y = y;
    out.report.output_defect = 0.0;
    out.report.displacement = operator_norm(x);
    return out;
  }

  // Cutoff below which the spectrum of f(y) is retracted onto the zeros of f.
  double cutoff = 4.0 * delta;
  if (*std::max_element(fy.begin(), fy.end()) < cutoff)
    throw DomainError(ErrorCode::DegenerateSpectrum,
                      "f(y) has no spectrum above the cutoff " +
                          std::to_string(cutoff));

  // Approximate unit of the range algebra of f(y): ramp 0 -> 1 over
  // [cutoff/2, cutoff], identically 1 on the retained spectrum.
  std::vector<double> ramp;
  for (double v : fy) {
    if (v >= cutoff)
      ramp.push_back(1.0);
    else if (v <= cutoff / 2.0)
      ramp.push_back(0.0);
    else
      ramp.push_back((v - cutoff / 2.0) / (cutoff / 2.0));
  }
  Matrix a = apply_spectral(ey, ramp);
  Matrix x0 = a * x;

  // Retract the eigenvalues of y whose f-value falls below the cutoff.
  std::vector<double> lam_new = lam;
  int q_rank = 0;
  std::vector<double> qdiag;
  for (size_t i = 0; i < lam.size(); ++i) {
    if (fy[i] < cutoff) {
      lam_new[i] = f.nearest_zero(lam[i]);
      qdiag.push_back(0.0);
    } else {
      qdiag.push_back(1.0);
      ++q_rank;
    }
  }
  out.y = apply_spectral(ey, lam_new);
  std::vector<double> fy_new = f_of(lam_new);
  for (size_t i = 0; i < fy_new.size(); ++i)
    if (fy[i] < cutoff) fy_new[i] = 0.0;  // retracted spectrum sits on zeros
  Matrix fy_hat = apply_spectral(ey, fy_new);
  std::vector<double> fy_new_sqrt;
  for (double v : fy_new) fy_new_sqrt.push_back(std::sqrt(v));
  Matrix fy_hat_sqrt = apply_spectral(ey, fy_new_sqrt);

  // Polar isometry of the retained cutdown q x0. Its self-product dominates
  // (cutoff - delta) q, so it has full rank on the range of q and the range
  // projection of the isometry is exactly q, which carries supp f(y-hat).
  Matrix q = apply_spectral(ey, qdiag);
  Eigen::JacobiSVD<Matrix> svd(q * x0,
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  Matrix v = svd.matrixU().leftCols(q_rank) *
             svd.matrixV().leftCols(q_rank).adjoint();

  out.x = fy_hat_sqrt * v;
  out.report.output_defect =
      operator_norm(out.x * out.x.adjoint() - fy_hat);
  out.report.displacement =
      std::max(operator_norm(x - out.x), operator_norm(y - out.y));
  return out;
}

namespace {

// g(s) = 0 for s <= 1/4, linear up to g(1/2) = 2, then 1/s: the
// normalization function for the partial-isometry construction.
double g_normalize(double s) {
  if (s <= 0.25) return 0.0;
  if (s < 0.5) return 8.0 * (s - 0.25);
  return 1.0 / s;
}

}  // namespace

Trivialization trivialize_path(const MatrixPath& projections, int rank,
                               const Tolerances& tol) {
  projections.validate();
  for (size_t j = 0; j < projections.entries.size(); ++j) {
    const Matrix& P = projections.entries[j];
    if (operator_norm(P - P.adjoint()) > tol.projection_check ||
        operator_norm(P * P - P) > tol.projection_check)
      throw DomainError(ErrorCode::RankMismatch,
                        "entry " + std::to_string(j) + " is not a projection");
    ESolver es(hermitian_part(P));
    int r = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > 0.5) ++r;
    if (r != rank)
      throw DomainError(ErrorCode::RankMismatch,
                        "entry " + std::to_string(j) + " has rank " +
                            std::to_string(r) + ", expected " +
                            std::to_string(rank));
  }
  for (size_t j = 0; j + 1 < projections.entries.size(); ++j)
    if (operator_norm(projections.entries[j + 1] - projections.entries[j]) >=
        0.5)
      throw DomainError(ErrorCode::StepTooLarge,
                        "step " + std::to_string(j) +
                            " moves the projection by 1/2 or more; refine the grid");

  Trivialization out;
  out.p = projections.entries.front();
  out.isometries.n = projections.n;
  out.isometries.grid = projections.grid;

  Matrix V = out.p;  // V V* = p, V* V = P(t_0)
  out.isometries.entries.push_back(V);
  for (size_t j = 1; j < projections.entries.size(); ++j) {
    const Matrix& Pn = projections.entries[j];
    // One step of the normalized-transport formula: B = p V P(t), then
    // W = [g(B B*)]^{1/2} B has W W* = p and W* W = P(t) exactly.
    Matrix B = out.p * V * Pn;
    ESolver es(hermitian_part(B * B.adjoint()));
    std::vector<double> gt;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      gt.push_back(std::sqrt(std::max(0.0, g_normalize(es.eigenvalues()(i)))));
    V = apply_spectral(es, gt) * B;
    out.isometries.entries.push_back(V);
  }

  for (size_t j = 0; j < out.isometries.entries.size(); ++j) {
    const Matrix& W = out.isometries.entries[j];
    out.max_vvstar_defect = std::max(
        out.max_vvstar_defect, operator_norm(W * W.adjoint() - out.p));
    out.max_vstarv_defect = std::max(
        out.max_vstarv_defect,
        operator_norm(W.adjoint() * W - projections.entries[j]));
  }
  return out;
}

MatrixPath glue(const MatrixPath& left, const MatrixPath& right,
                const Rational& t1) {
  left.validate();
  right.validate();
  if (left.n != right.n)
    throw std::invalid_argument("paths have different matrix dimensions");
  auto find = [&t1](const MatrixPath& p) -> std::optional<size_t> {
    for (size_t i = 0; i < p.grid.size(); ++i)
      if (p.grid[i] == t1) return i;
    return std::nullopt;
  };
  auto li = find(left);
  auto ri = find(right);
  if (!li || !ri)
    throw DomainError(ErrorCode::NoOverlap,
                      "t1 = " + t1.str() + " must lie on both grids");

  Matrix seam = left.entries[*li] * right.entries[*ri].adjoint();
  MatrixPath out;
  out.n = left.n;
  for (size_t i = 0; i <= *li; ++i) {
    out.grid.push_back(left.grid[i]);
    out.entries.push_back(left.entries[i]);
  }
  for (size_t i = *ri + 1; i < right.grid.size(); ++i) {
    out.grid.push_back(right.grid[i]);
    out.entries.push_back(seam * right.entries[i]);
  }
  out.validate();
  return out;
}

}  // namespace ctkit
