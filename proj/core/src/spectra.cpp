#include "hermitia/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermitia/errors.hpp"

namespace hermitia {

bool HermitianMatrix::is_hermitian() const {
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t t = s; t < n_; ++t) {
      if (at(s, t) != at(t, s).conj()) {
        return false;
      }
    }
  }
  return true;
}

bool HermitianMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

HermitianMatrix HermitianMatrix::conj_transpose() const {
  HermitianMatrix out(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t t = 0; t < n_; ++t) {
      out.at(t, s) = at(s, t).conj();
    }
  }
  return out;
}

HermitianMatrix operator*(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw PreconditionError("matrix dimension mismatch");
  }
  const std::size_t n = a.dim();
  HermitianMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!b.at(k, j).is_zero()) {
          out.at(i, j) += aik * b.at(k, j);
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<std::complex<double>>> HermitianMatrix::to_complex() const {
  std::vector<std::vector<std::complex<double>>> out(n_, std::vector<std::complex<double>>(n_));
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t t = 0; t < n_; ++t) {
      out[s][t] = at(s, t).to_complex();
    }
  }
  return out;
}

HermitianMatrix congruence(const HermitianMatrix& h, const GaussianMatrix& s) { return s.conj_transpose() * h * s; }

std::string InertiaTriple::to_string() const {
  return "p=" + std::to_string(p) + " n=" + std::to_string(n_neg) + " eta=" + std::to_string(eta);
}

HermitianMatrix hermitian_matrix(const QuartGainGraph& g) {
  HermitianMatrix h(g.order());
  for (const Edge& e : g.edges()) {
    const std::complex<double> z = e.gain.to_complex();
    const GaussianRational w(Rational(static_cast<long>(z.real())), Rational(static_cast<long>(z.imag())));
    h.at(e.u, e.v) = w;
    h.at(e.v, e.u) = w.conj();
  }
  return h;
}

InertiaTriple inertia_exact(const HermitianMatrix& h) {
  if (!h.is_hermitian()) {
    throw PreconditionError("inertia_exact: matrix is not Hermitian");
  }
  HermitianMatrix a = h;
  std::vector<std::size_t> live(h.dim());
  for (std::size_t i = 0; i < live.size(); ++i) {
    live[i] = i;
  }
  InertiaTriple out;

  auto drop = [&live](std::size_t v) { live.erase(std::find(live.begin(), live.end(), v)); };

  while (!live.empty()) {
    const auto diag = std::find_if(live.begin(), live.end(), [&a](std::size_t k) { return !a.at(k, k).is_zero(); });
    if (diag != live.end()) {
      const std::size_t k = *diag;
      const GaussianRational d = a.at(k, k);
      (d.sign_of_real() > 0 ? out.p : out.n_neg) += 1;
      drop(k);
      for (std::size_t i : live) {
        if (a.at(i, k).is_zero()) {
          continue;
        }
        const GaussianRational f = a.at(i, k) / d;
        for (std::size_t j : live) {
          if (!a.at(k, j).is_zero()) {
            a.at(i, j) -= f * a.at(k, j);
          }
        }
      }
      continue;
    }

    std::size_t s = 0;
    std::size_t t = 0;
    bool found = false;
    for (std::size_t x = 0; x < live.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        if (!a.at(live[x], live[y]).is_zero()) {
          s = live[x];
          t = live[y];
          found = true;
          break;
        }
      }
    }
    if (!found) {
      break;
    }
    // Schur complement of the block [[0, h], [conj h, 0]]; its inverse is
    // [[0, 1/conj h], [1/h, 0]].
    const GaussianRational inv_h = GaussianRational(1) / a.at(s, t);
    const GaussianRational inv_hbar = inv_h.conj();
    out.p += 1;
    out.n_neg += 1;
    drop(s);
    drop(t);
    for (std::size_t i : live) {
      const GaussianRational& ais = a.at(i, s);
      const GaussianRational& ait = a.at(i, t);
      if (ais.is_zero() && ait.is_zero()) {
        continue;
      }
      const GaussianRational fs = ais * inv_hbar;
      const GaussianRational ft = ait * inv_h;
      for (std::size_t j : live) {
        if (!fs.is_zero() && !a.at(t, j).is_zero()) {
          a.at(i, j) -= fs * a.at(t, j);
        }
        if (!ft.is_zero() && !a.at(s, j).is_zero()) {
          a.at(i, j) -= ft * a.at(s, j);
        }
      }
    }
  }
  out.eta = static_cast<int>(live.size());
  return out;
}

InertiaTriple inertia(const QuartGainGraph& g) {
  InertiaTriple out;
  for (const VertexSet& part : components(g)) {
    if (part.size() == 1) {
      out.eta += 1;
      continue;
    }
    out += inertia_exact(hermitian_matrix(induced_subgraph(g, part)));
  }
  return out;
}

int rank(const QuartGainGraph& g) { return inertia(g).rank(); }

std::vector<double> eig_float(const HermitianMatrix& h) {
  if (!h.is_hermitian()) {
    throw PreconditionError("eig_float: matrix is not Hermitian");
  }
  using cd = std::complex<double>;
  auto a = h.to_complex();
  const std::size_t n = h.dim();

  double frob2 = 0.0;
  for (const auto& row : a) {
    for (const cd& z : row) {
      frob2 += std::norm(z);
    }
  }
  const double target = 1e-12 * std::sqrt(frob2);
  auto off_norm = [&a, n] {
    double sum = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) {
          sum += std::norm(a[p][q]);
        }
      }
    }
    return std::sqrt(sum);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("eig_float: Jacobi iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a[p][q]);
        if (mag == 0.0) {
          continue;
        }
        // D = diag(1, conj u) makes the (p, q) entry real; then a real
        // rotation zeroes it.
        const cd u = a[p][q] / mag;
        const double app = a[p][p].real();
        const double aqq = a[q][q].real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cd upp = c;
        const cd upq = s;
        const cd uqp = std::conj(u) * (-s);
        const cd uqq = std::conj(u) * c;
        for (std::size_t k = 0; k < n; ++k) {
          const cd akp = a[k][p];
          const cd akq = a[k][q];
          a[k][p] = akp * upp + akq * uqp;
          a[k][q] = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cd apk = a[p][k];
          const cd aqk = a[q][k];
          a[p][k] = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a[q][k] = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        a[p][p] = a[p][p].real();
        a[q][q] = a[q][q].real();
      }
    }
  }

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = a[k][k].real();
  }
  std::sort(out.begin(), out.end());
  return out;
}

InertiaTriple inertia_float(const HermitianMatrix& h, double tol) {
  if (!(tol > 0.0)) {
    throw PreconditionError("inertia_float: tolerance must be positive");
  }
  const auto eig = eig_float(h);
  double scale = 1.0;
  for (double x : eig) {
    scale = std::max(scale, std::abs(x));
  }
  InertiaTriple out;
  for (double x : eig) {
    if (x > tol * scale) {
      ++out.p;
    } else if (x < -tol * scale) {
      ++out.n_neg;
    } else {
      ++out.eta;
    }
  }
  return out;
}

}  // namespace hermitia
