#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hermitia/graph.hpp"
#include "hermitia/numeric.hpp"

namespace hermitia {

/// Dense square matrix over Q(i). The name records its intended use; the
/// Hermitian property is verified by the routines that depend on it.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t dim() const { return n_; }
  const GaussianRational& at(std::size_t s, std::size_t t) const { return a_.at(s * n_ + t); }
  GaussianRational& at(std::size_t s, std::size_t t) { return a_.at(s * n_ + t); }

  bool is_hermitian() const;
  bool is_zero() const;

  HermitianMatrix conj_transpose() const;
  friend HermitianMatrix operator*(const HermitianMatrix& a, const HermitianMatrix& b);
  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

  std::vector<std::vector<std::complex<double>>> to_complex() const;

 private:
  std::size_t n_ = 0;
  std::vector<GaussianRational> a_;
};

/// General square matrix over Q(i); used for congruence transforms.
using GaussianMatrix = HermitianMatrix;

/// S* H S.
HermitianMatrix congruence(const HermitianMatrix& h, const GaussianMatrix& s);

struct InertiaTriple {
  int p = 0;
  int n_neg = 0;
  int eta = 0;

  int rank() const { return p + n_neg; }
  int dim() const { return p + n_neg + eta; }

  InertiaTriple& operator+=(const InertiaTriple& o) {
    p += o.p;
    n_neg += o.n_neg;
    eta += o.eta;
    return *this;
  }
  friend InertiaTriple operator+(InertiaTriple a, const InertiaTriple& b) { return a += b; }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;

  /// "p=<p> n=<n> eta=<eta>"
  std::string to_string() const;
};

HermitianMatrix hermitian_matrix(const QuartGainGraph& g);

/// Exact inertia by Hermitian congruence: 1x1 pivots on the first nonzero
/// diagonal entry, otherwise a 2x2 hyperbolic pivot on the first nonzero
/// (s, t) with s < t. Throws PreconditionError on a non-Hermitian input.
InertiaTriple inertia_exact(const HermitianMatrix& h);

/// inertia_exact of H(G), computed per connected component and summed.
InertiaTriple inertia(const QuartGainGraph& g);
int rank(const QuartGainGraph& g);

/// Ascending eigenvalues by cyclic complex Jacobi rotations. Throws
/// std::runtime_error if the sweep budget runs out.
std::vector<double> eig_float(const HermitianMatrix& h);

/// Counts eigenvalues above tol*scale, below -tol*scale and in between, with
/// scale = max(1, max |lambda|). Requires tol > 0.
InertiaTriple inertia_float(const HermitianMatrix& h, double tol = 1e-9);

}  // namespace hermitia
