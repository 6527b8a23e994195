#pragma once

#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

using DenseMatrix = std::vector<std::vector<double>>;

/// D^{-1/2} L D^{-1/2}; requires every degree positive.
DenseMatrix normalized_laplacian(const Graph& g);

DenseMatrix laplacian_matrix_dense(const Graph& g);

/**
 * Eigendecomposition of a symmetric matrix. `eigenvectors[k]` is the unit
 * eigenvector for `eigenvalues[k]`; `residual` bounds max ‖Mx − λx‖∞.
 */
struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    std::vector<std::vector<double>> eigenvectors;
    double residual = 0;
};

/// Cyclic Jacobi; rotates until the largest off-diagonal entry drops below
/// `tol` or the sweep budget runs out.
Spectrum symmetric_spectrum(const DenseMatrix& m, double tol = 1e-12);

/// Exact conductance minimizer found by exhaustive subset enumeration.
struct CutReport {
    std::vector<int> best_subset;
    double h = 0;
    int boundary = 0;         // |E(S, complement)|
    int volume = 0;           // vol(S)
    int volume_complement = 0;
};

CutReport cheeger_constant(const Graph& g);

/// 1 - sqrt(1 - h^2) <= lambda_2 <= 2h, plus the classical h^2/2 <= lambda_2.
struct CheegerReport {
    double h = 0;
    double lambda2 = 0;
    bool lower_bound = false;
    bool upper_bound = false;
    bool classical_lower_bound = false;
    double slack_lower = 0;
    double slack_upper = 0;
};

CheegerReport cheeger_inequality_check(const Graph& g, double tol = 1e-8);

/// phi_p(t) = |t|^{p-2} t.
double phi_p(double t, double p);

std::vector<double> p_laplacian_apply(const Graph& g, double p, const std::vector<double>& x,
                                      bool normalized);

/// Residual check of the p-Laplacian eigen-equation plus its side identities.
struct PEigenReport {
    bool ok = false;
    double residual = 0;           // max component residual of the eigen-equation
    double rayleigh_gap = 0;       // |R_p(x) - lambda|
    double balance = 0;            // |sum phi_p(x_i)| when it must vanish
};

PEigenReport p_eigenpair_check(const Graph& g, double p, double lambda,
                               const std::vector<double>& x, bool normalized, double tol = 1e-9);

/// Closed-form nonzero spectrum of the complete graph with witness vectors.
struct PEigenpair {
    double lambda = 0;
    int alpha = 0;  // |A|, the support of the positive part
    int beta = 0;   // |B|
    std::vector<double> x;
};

std::vector<PEigenpair> complete_graph_p_spectrum(int n, double p);

}  // namespace graphlib
