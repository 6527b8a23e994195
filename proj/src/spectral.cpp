#include "graphlib/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphlib/traversal.hpp"

namespace graphlib {

namespace {

void require_simple_undirected(const Graph& g) {
    if (g.directed) fail(errc::directed_unsupported, "spectral ops need an undirected graph");
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    return d;
}

}  // namespace

DenseMatrix laplacian_matrix_dense(const Graph& g) {
    require_simple_undirected(g);
    DenseMatrix l(g.n, std::vector<double>(g.n, 0));
    for (int v = 0; v < g.n; ++v) l[v][v] = g.degree(v);
    for (auto [u, v] : g.edges) {
        l[u][v] -= 1;
        l[v][u] -= 1;
    }
    return l;
}

DenseMatrix normalized_laplacian(const Graph& g) {
    require_simple_undirected(g);
    std::vector<int> d = degrees(g);
    for (int v = 0; v < g.n; ++v)
        if (d[v] == 0) fail(errc::isolated_vertex, "vertex " + std::to_string(v) + " is isolated");
    DenseMatrix m(g.n, std::vector<double>(g.n, 0));
    for (int v = 0; v < g.n; ++v) m[v][v] = 1;
    for (auto [u, v] : g.edges) {
        double w = -1.0 / std::sqrt(static_cast<double>(d[u]) * d[v]);
        m[u][v] = w;
        m[v][u] = w;
    }
    return m;
}

Spectrum symmetric_spectrum(const DenseMatrix& m, double tol) {
    int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) fail(errc::bad_dimension, "matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m[i][j] - m[j][i]) > 1e-9)
                fail(errc::not_symmetric, "matrix is not symmetric");

    DenseMatrix a = m;
    DenseMatrix v(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i) v[i][i] = 1;

    auto max_offdiag = [&]() {
        double best = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) best = std::max(best, std::abs(a[i][j]));
        return best;
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (max_offdiag() > tol) {
        if (++sweep > kMaxSweeps) fail(errc::no_convergence, "jacobi sweep budget exhausted");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) <= tol / (n * n + 1.0)) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });

    Spectrum spec;
    for (int k : order) {
        spec.eigenvalues.push_back(a[k][k]);
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = v[i][k];
        spec.eigenvectors.push_back(std::move(x));
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            double mx = 0;
            for (int j = 0; j < n; ++j) mx += m[i][j] * spec.eigenvectors[k][j];
            spec.residual =
                std::max(spec.residual, std::abs(mx - spec.eigenvalues[k] * spec.eigenvectors[k][i]));
        }
    }
    return spec;
}

CutReport cheeger_constant(const Graph& g) {
    require_simple_undirected(g);
    if (g.n < 2) fail(errc::too_small, "cheeger constant needs >= 2 vertices");
    if (g.n > 22) fail(errc::too_large, "exhaustive cut search is limited to n <= 22");
    if (!is_connected(g)) fail(errc::disconnected, "cheeger constant needs a connected graph");

    std::vector<int> d = degrees(g);
    int total_volume = 2 * g.m();

    CutReport best;
    best.h = g.n;  // any real cut beats this
    // every cut has one side containing vertex 0: enumerate those sides
    std::uint64_t full = (std::uint64_t{1} << g.n) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
        int vol = 0;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) vol += d[v];
        int boundary = 0;
        for (auto [u, v] : g.edges)
            if (((mask >> u) & 1) != ((mask >> v) & 1)) ++boundary;
        int small_vol = std::min(vol, total_volume - vol);
        if (small_vol == 0) continue;
        double h = static_cast<double>(boundary) / small_vol;
        if (h < best.h) {
            best.h = h;
            best.boundary = boundary;
            best.volume = vol;
            best.volume_complement = total_volume - vol;
            best.best_subset.clear();
            for (int v = 0; v < g.n; ++v)
                if (mask >> v & 1) best.best_subset.push_back(v);
        }
    }
    return best;
}

CheegerReport cheeger_inequality_check(const Graph& g, double tol) {
    CutReport cut = cheeger_constant(g);
    Spectrum spec = symmetric_spectrum(normalized_laplacian(g));
    CheegerReport rep;
    rep.h = cut.h;
    rep.lambda2 = spec.eigenvalues[1];
    rep.slack_lower = rep.lambda2 - (1 - std::sqrt(std::max(0.0, 1 - rep.h * rep.h)));
    rep.slack_upper = 2 * rep.h - rep.lambda2;
    rep.lower_bound = rep.slack_lower >= -tol;
    rep.upper_bound = rep.slack_upper >= -tol;
    rep.classical_lower_bound = rep.lambda2 >= rep.h * rep.h / 2 - tol;
    return rep;
}

double phi_p(double t, double p) {
    if (t == 0) return 0;
    return std::pow(std::abs(t), p - 2) * t;
}

std::vector<double> p_laplacian_apply(const Graph& g, double p, const std::vector<double>& x,
                                      bool normalized) {
    require_simple_undirected(g);
    if (!(p > 1)) fail(errc::bad_p, "p must be > 1");
    if (static_cast<int>(x.size()) != g.n) fail(errc::bad_dimension, "x must have one entry per vertex");
    std::vector<double> y(g.n, 0);
    for (auto [u, v] : g.edges) {
        double step = phi_p(x[u] - x[v], p);
        y[u] += step;
        y[v] -= step;
    }
    if (normalized)
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) == 0) fail(errc::isolated_vertex, "normalized form needs d_i > 0");
            y[v] /= g.degree(v);
        }
    return y;
}

PEigenReport p_eigenpair_check(const Graph& g, double p, double lambda,
                               const std::vector<double>& x, bool normalized, double tol) {
    std::vector<double> lp = p_laplacian_apply(g, p, x, normalized);
    bool nonzero = false;
    for (double xi : x) nonzero = nonzero || xi != 0;
    if (!nonzero) fail(errc::zero_vector, "eigenvectors must be nonzero");

    PEigenReport rep;
    for (int v = 0; v < g.n; ++v)
        rep.residual = std::max(rep.residual, std::abs(lp[v] - lambda * phi_p(x[v], p)));

    // Rayleigh quotient identity: gradient p-energy over the (weighted) p-norm
    double num = 0, den = 0;
    for (auto [u, v] : g.edges) num += std::pow(std::abs(x[u] - x[v]), p);
    for (int v = 0; v < g.n; ++v)
        den += (normalized ? g.degree(v) : 1.0) * std::pow(std::abs(x[v]), p);
    rep.rayleigh_gap = std::abs(num / den - lambda);

    if (!normalized && lambda != 0) {
        double sum = 0;
        for (double xi : x) sum += phi_p(xi, p);
        rep.balance = std::abs(sum);
    }
    rep.ok = rep.residual <= tol && rep.rayleigh_gap <= tol && rep.balance <= tol;
    return rep;
}

std::vector<PEigenpair> complete_graph_p_spectrum(int n, double p) {
    if (n < 2) fail(errc::too_small, "complete graph spectrum needs n >= 2");
    if (!(p > 1)) fail(errc::bad_p, "p must be > 1");
    double q = 1 / (p - 1);
    std::vector<PEigenpair> out;
    for (int alpha = 1; alpha < n; ++alpha)
        for (int beta = 1; alpha + beta <= n; ++beta) {
            PEigenpair pair;
            pair.alpha = alpha;
            pair.beta = beta;
            pair.lambda = n - alpha - beta +
                          std::pow(std::pow(alpha, q) + std::pow(beta, q), p - 1);
            // witness a·1_A − b·1_B with A the first alpha, B the last beta
            pair.x.assign(n, 0);
            double a = std::pow(beta, q), b = std::pow(alpha, q);
            for (int i = 0; i < alpha; ++i) pair.x[i] = a;
            for (int i = n - beta; i < n; ++i) pair.x[i] = -b;
            out.push_back(std::move(pair));
        }
    return out;
}

}  // namespace graphlib
