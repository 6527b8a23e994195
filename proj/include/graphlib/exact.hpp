#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphlib/graph.hpp"

namespace graphlib {

/**
 * Exact rational on 64-bit numerator/denominator, always normalized
 * (den > 0, gcd = 1). Intermediate products run through 128 bits and
 * overflow of the reduced result throws TooLarge.
 */
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long v) : num(v), den(1) {}
    Rational(long long n, long long d);

    static Rational from_double(double x);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return {-num, den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Dense row-major matrix of exact rationals.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    Rational& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    static ExactMatrix identity(int n);
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix pow(int k) const;
    bool operator==(const ExactMatrix& o) const;
};

enum class MatrixKind { adjacency, incidence, laplacian };

/**
 * Canonical matrices. Incidence: directed graphs get +1 at the tail and -1 at
 * the head. Undirected graphs get unsigned 1/1 columns unless `orientation`
 * is given: then per-edge 0 means u->v (the stored order, the default when the
 * vector is shorter than the edge list) and 1 means v->u, with signed entries.
 */
ExactMatrix matrix(const Graph& g, MatrixKind kind,
                   const std::optional<std::vector<int>>& orientation = std::nullopt);

/// (A^k)_{ij} in exact integer arithmetic; walks of length k from i to j.
long long count_walks(const Graph& g, int i, int j, int k);

}  // namespace graphlib
