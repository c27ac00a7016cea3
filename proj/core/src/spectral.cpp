#include "qcopy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcopy/errors.hpp"

namespace qcopy {

namespace {

double off_diagonal_mass(const Operator& h) {
  double sum = 0.0;
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < h.dim(); ++c)
      if (r != c) sum += std::norm(h(r, c));
  return std::sqrt(sum);
}

// One two-sided rotation zeroing h(p,q). V accumulates the right factors so
// that the original matrix equals V h V† at every stage.
void rotate(Operator& h, Operator& v, std::size_t p, std::size_t q) {
  const Complex b = h(p, q);
  const double babs = std::abs(b);
  if (babs == 0.0) return;

  const double a = h(p, p).real();
  const double d = h(q, q).real();
  const double tau = (d - a) / (2.0 * babs);
  // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0 keeps |θ| ≤ π/4.
  const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = (b / babs) * (t * c);
  const Complex sconj = std::conj(s);

  const std::size_t n = h.dim();
  // h ← J† h J with J = I except J(p,p)=J(q,q)=c, J(p,q)=−s, J(q,p)=s̄.
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex hpk = h(p, k);
    const Complex hqk = h(q, k);
    h(p, k) = c * hpk + s * hqk;
    h(q, k) = -sconj * hpk + c * hqk;
    h(k, p) = std::conj(h(p, k));
    h(k, q) = std::conj(h(q, k));
  }
  const double re_sb = (sconj * b).real();
  h(p, p) = a * c * c + 2.0 * c * re_sb + d * (t * c) * (t * c);
  h(q, q) = a * (t * c) * (t * c) - 2.0 * c * re_sb + d * c * c;
  h(p, q) = 0.0;
  h(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + sconj * vkq;
    v(k, q) = -s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const Operator& h, double tol) {
  const std::size_t n = h.dim();
  const double norm = h.frobenius_norm();
  const double residual = h.hermiticity_residual();
  if (norm > 0.0 && residual > tol * norm)
    throw NotHermitian("hermitian_eig: operand is not Hermitian", residual / norm);

  EigenDecomposition out{std::vector<double>(n, 0.0), Operator::identity(n)};
  if (norm == 0.0) return out;

  Operator work = h;
  // Symmetrize once so roundoff-level defects cannot drift during sweeps.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (work(r, c) + std::conj(work(c, r)));
      work(r, c) = avg;
      work(c, r) = std::conj(avg);
    }
    work(r, r) = work(r, r).real();
  }

  const double target = 1e-14 * norm;
  // Entries this small cannot push the off-diagonal mass past the target.
  const double skip = target / (static_cast<double>(n) * static_cast<double>(n));
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_mass(work) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(work(p, q)) > skip) rotate(work, out.eigenvectors, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return work(a, a).real() < work(b, b).real();
  });

  Operator sorted_vectors(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = work(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r)
      sorted_vectors(r, c) = out.eigenvectors(r, order[c]);
  }
  out.eigenvectors = std::move(sorted_vectors);
  return out;
}

Operator propagator(const Operator& h, double dt, double tol) {
  const EigenDecomposition eig = hermitian_eig(h, tol);
  const std::size_t n = h.dim();
  Operator scaled = eig.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::polar(1.0, -eig.eigenvalues[c] * dt);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= phase;
  }
  return scaled * eig.eigenvectors.adjoint();
}

}  // namespace qcopy
