#include "jcxy/eigensolve.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace jcxy {

SolverError::SolverError(int block_size, double residual)
    : std::runtime_error("symmetric eigensolver failed to converge on a block of size " +
                         std::to_string(block_size) + " (residual " + std::to_string(residual) + ")"),
      block_size_(block_size),
      residual_(residual) {}

namespace {

constexpr int kMaxQlIterations = 60;

// off[i] couples i and i+1; off[n-1] is unused and zero.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

void check_symmetric(const DenseMatrix& a) {
  const int n = a.size();
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (!(std::abs(a(r, c) - a(c, r)) <= 1e-12)) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ")");
      }
    }
  }
}

// Householder reduction A = Q T Q^T; `a` is consumed. Q is accumulated only if requested.
Tridiagonal tridiagonalize(DenseMatrix& a, DenseMatrix* q) {
  const int n = a.size();
  Tridiagonal t{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<double> v(n, 0.0);
  std::vector<double> w(n, 0.0);

  // Only the lower triangle of `a` is kept current.
  for (int k = 0; k + 2 < n; ++k) {
    t.diag[k] = a(k, k);
    const double x0 = a(k + 1, k);
    double sigma = 0.0;
    for (int i = k + 2; i < n; ++i) sigma += a(i, k) * a(i, k);
    if (sigma == 0.0) {
      t.off[k] = x0;
      continue;
    }
    const double norm = std::sqrt(x0 * x0 + sigma);
    const double alpha = x0 > 0.0 ? -norm : norm;
    v[k + 1] = x0 - alpha;
    for (int i = k + 2; i < n; ++i) v[i] = a(i, k);
    const double beta = 2.0 / (v[k + 1] * v[k + 1] + sigma);
    t.off[k] = alpha;

    // w = beta * A22 v from the lower triangle.
    const int lo = k + 1;
    std::fill(w.begin() + lo, w.end(), 0.0);
    for (int r = lo; r < n; ++r) {
      const double* row = a.row(r);
      const double vr = v[r];
      double s = 0.0;
      for (int c = lo; c < r; ++c) {
        s += row[c] * v[c];
        w[c] += row[c] * vr;
      }
      w[r] += s + row[r] * vr;
    }
    double pv = 0.0;
    for (int r = lo; r < n; ++r) {
      w[r] *= beta;
      pv += w[r] * v[r];
    }
    const double half = 0.5 * beta * pv;
    for (int r = lo; r < n; ++r) w[r] -= half * v[r];

    for (int r = lo; r < n; ++r) {
      double* row = a.row(r);
      const double vr = v[r];
      const double wr = w[r];
      for (int c = lo; c <= r; ++c) row[c] -= vr * w[c] + wr * v[c];
    }

    if (q != nullptr) {
      for (int r = 0; r < n; ++r) {
        double* qrow = q->row(r);
        double s = 0.0;
        for (int c = lo; c < n; ++c) s += qrow[c] * v[c];
        s *= beta;
        for (int c = lo; c < n; ++c) qrow[c] -= s * v[c];
      }
    }
  }
  if (n >= 2) {
    t.diag[n - 2] = a(n - 2, n - 2);
    t.off[n - 2] = a(n - 1, n - 2);
  }
  if (n >= 1) t.diag[n - 1] = a(n - 1, n - 1);
  return t;
}

// Implicit-shift QL on a tridiagonal matrix. Rotations are applied to the columns of z if given.
void tridiagonal_ql(Tridiagonal& t, DenseMatrix* z) {
  auto& d = t.diag;
  auto& e = t.off;
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= DBL_EPSILON * dd) break;
      }
      if (m == l) break;
      if (iter++ == kMaxQlIterations) throw SolverError(n, std::abs(e[l]));

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (int k = 0; k < n; ++k) {
            double* zr = z->row(k);
            const double zf = zr[i + 1];
            zr[i + 1] = s * zr[i] + c * zf;
            zr[i] = c * zr[i] - s * zf;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

// Number of eigenvalues of T strictly below x.
int sturm_count(const Tridiagonal& t, double x) {
  const int n = static_cast<int>(t.diag.size());
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < n; ++i) {
    const double off2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : off2 / q);
    if (q == 0.0) q = -DBL_MIN;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> eigvals_symmetric(const DenseMatrix& a) {
  check_symmetric(a);
  DenseMatrix work = a;
  Tridiagonal t = tridiagonalize(work, nullptr);
  tridiagonal_ql(t, nullptr);
  std::sort(t.diag.begin(), t.diag.end());
  return std::move(t.diag);
}

Eigensystem eigh_symmetric(const DenseMatrix& a) {
  check_symmetric(a);
  const int n = a.size();
  DenseMatrix work = a;
  DenseMatrix q(n);
  for (int i = 0; i < n; ++i) q(i, i) = 1.0;
  Tridiagonal t = tridiagonalize(work, &q);
  tridiagonal_ql(t, &q);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return t.diag[x] < t.diag[y]; });
  Eigensystem out{std::vector<double>(n), DenseMatrix(n)};
  for (int c = 0; c < n; ++c) {
    out.values[c] = t.diag[order[c]];
    for (int r = 0; r < n; ++r) out.vectors(r, c) = q(r, order[c]);
  }
  return out;
}

double largest_eigenvalue(const DenseMatrix& a) {
  check_symmetric(a);
  const int n = a.size();
  if (n == 0) throw std::invalid_argument("empty matrix has no eigenvalues");
  if (n == 1) return a(0, 0);
  DenseMatrix work = a;
  const Tridiagonal t = tridiagonalize(work, nullptr);

  double lo = t.diag[0];
  double hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  lo -= DBL_EPSILON * scale + DBL_MIN;
  hi += DBL_EPSILON * scale + DBL_MIN;
  // Invariant: fewer than n eigenvalues below lo, all n below hi.
  while (hi - lo > 2.0 * DBL_EPSILON * scale + DBL_MIN) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) < n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SectorSolver::SectorSolver(GeneratorPair pair) : pair_(std::move(pair)), sectors_(decompose(pair_.n_sites)) {
  jc_blocks_.reserve(sectors_.size());
  xy_blocks_.reserve(sectors_.size());
  for (const auto& s : sectors_) {
    jc_blocks_.push_back(extract_block(pair_.h_g, s));
    xy_blocks_.push_back(extract_block(pair_.h_j, s));
  }
}

DenseMatrix SectorSolver::block(std::size_t sector, double g, double j) const {
  const auto& bg = jc_blocks_.at(sector).data();
  const auto& bj = xy_blocks_[sector].data();
  DenseMatrix out(sectors_[sector].dim());
  auto& o = out.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = g * bg[i] + j * bj[i];
  return out;
}

std::vector<double> SectorSolver::sector_eigenvalues(std::size_t sector, double g, double j) const {
  return eigvals_symmetric(block(sector, g, j));
}

namespace {

Spectrum merge(std::vector<std::pair<double, int>>& tagged) {
  std::sort(tagged.begin(), tagged.end());
  Spectrum out;
  out.energies.reserve(tagged.size());
  out.sector_mz.reserve(tagged.size());
  for (const auto& [e, twice] : tagged) {
    out.energies.push_back(e);
    out.sector_mz.push_back(HalfInt::from_twice(twice));
  }
  return out;
}

void check_finite(double g, double j) {
  if (!std::isfinite(g) || !std::isfinite(j)) throw std::invalid_argument("non-finite coupling");
}

}  // namespace

Spectrum SectorSolver::spectrum(double g, double j) const {
  check_finite(g, j);
  std::vector<std::pair<double, int>> tagged;
  tagged.reserve(pair_.h_g.dim());
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    const int twice = sectors_[s].total_mz.twice();
    for (double e : sector_eigenvalues(s, g, j)) tagged.emplace_back(e, twice);
  }
  return merge(tagged);
}

Spectrum SectorSolver::spectrum_filtered(double g, double j, HalfInt abs_total_mz) const {
  check_finite(g, j);
  std::vector<std::pair<double, int>> tagged;
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    if (sectors_[s].total_mz.abs() != abs_total_mz) continue;
    const int twice = sectors_[s].total_mz.twice();
    for (double e : sector_eigenvalues(s, g, j)) tagged.emplace_back(e, twice);
  }
  return merge(tagged);
}

double SectorSolver::top_eigenvalue(double g, double j) const {
  check_finite(g, j);
  double top = -HUGE_VAL;
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    if (sectors_[s].total_mz.twice() < 0) continue;
    top = std::max(top, largest_eigenvalue(block(s, g, j)));
  }
  return top;
}

Spectrum full_spectrum(const GeneratorPair& pair, double g, double j) {
  return SectorSolver(pair).spectrum(g, j);
}

DegeneracySummary degeneracy_summary(const std::vector<double>& sorted_energies, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("degeneracy tolerance must be positive");
  DegeneracySummary out;
  std::size_t start = 0;
  const std::size_t n = sorted_energies.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || sorted_energies[i] - sorted_energies[i - 1] > tol) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += sorted_energies[k];
      out.levels.push_back({sum / static_cast<double>(i - start), static_cast<int>(i - start)});
      start = i;
    }
  }
  out.distinct_count = static_cast<int>(out.levels.size());
  return out;
}

DegeneracySummary degeneracy_summary(const Spectrum& spec, double tol) {
  return degeneracy_summary(spec.energies, tol);
}

}  // namespace jcxy
