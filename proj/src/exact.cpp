#include "graphlib/exact.hpp"

#include <cmath>
#include <numeric>

namespace graphlib {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::too_large, "exact arithmetic overflow");
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 num, i128 den) {
    if (den == 0) fail(errc::bad_params, "division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num = narrow(num);
    r.den = narrow(den);
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) fail(errc::bad_params, "non-finite weight");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    i128 num = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    i128 den = 1;
    while (exp > 0) {
        num *= 2;
        --exp;
        if (num > INT64_MAX || num < INT64_MIN) fail(errc::too_large, "weight too large for exact form");
    }
    while (exp < 0) {
        if (num % 2 == 0)
            num /= 2;
        else {
            den *= 2;
            if (den > INT64_MAX) fail(errc::too_large, "weight denominator too large");
        }
        ++exp;
    }
    return make(num, den);
}

Rational Rational::operator+(const Rational& o) const {
    return make(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return make(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return make(i128(num) * o.num, i128(den) * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) fail(errc::bad_params, "division by zero");
    return make(i128(num) * o.den, i128(den) * o.num);
}
bool Rational::operator<(const Rational& o) const {
    return i128(num) * o.den < i128(o.num) * den;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols != o.rows) fail(errc::bad_dimension, "matrix product shape mismatch");
    ExactMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& a = at(i, k);
            if (a.num == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Rational& b = o.at(k, j);
                if (b.num == 0) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::pow(int k) const {
    if (rows != cols) fail(errc::bad_dimension, "matrix power needs a square matrix");
    if (k < 0) fail(errc::bad_params, "negative matrix power");
    ExactMatrix result = identity(rows);
    ExactMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
}

ExactMatrix matrix(const Graph& g, MatrixKind kind,
                   const std::optional<std::vector<int>>& orientation) {
    switch (kind) {
        case MatrixKind::adjacency: {
            ExactMatrix a(g.n, g.n);
            for (int e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edges[e];
                Rational w = g.weighted() ? Rational::from_double(g.weights[e]) : Rational(1);
                a.at(u, v) = w;
                if (!g.directed) a.at(v, u) = w;
            }
            return a;
        }
        case MatrixKind::incidence: {
            ExactMatrix b(g.n, g.m());
            for (int e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edges[e];
                if (g.directed) {
                    b.at(u, e) = Rational(1);
                    b.at(v, e) = Rational(-1);
                } else if (orientation) {
                    bool flip = e < static_cast<int>(orientation->size()) && (*orientation)[e] != 0;
                    b.at(flip ? v : u, e) = Rational(1);
                    b.at(flip ? u : v, e) = Rational(-1);
                } else {
                    b.at(u, e) = Rational(1);
                    b.at(v, e) = Rational(1);
                }
            }
            return b;
        }
        case MatrixKind::laplacian: {
            if (g.directed) fail(errc::kind_unsupported, "laplacian of a directed graph");
            if (g.weighted()) fail(errc::kind_unsupported, "laplacian of a weighted graph");
            ExactMatrix l(g.n, g.n);
            for (int v = 0; v < g.n; ++v) l.at(v, v) = Rational(g.degree(v));
            for (auto [u, v] : g.edges) {
                l.at(u, v) = Rational(-1);
                l.at(v, u) = Rational(-1);
            }
            return l;
        }
    }
    fail(errc::bad_params, "unknown matrix kind");
}

long long count_walks(const Graph& g, int i, int j, int k) {
    if (g.weighted()) fail(errc::weighted_unsupported, "walk counting needs an unweighted graph");
    if (i < 0 || i >= g.n || j < 0 || j >= g.n) fail(errc::index_out_of_range, "vertex out of range");
    if (k < 1) fail(errc::bad_params, "walk length must be >= 1");
    ExactMatrix a = matrix(g, MatrixKind::adjacency);
    ExactMatrix ak = a.pow(k);
    return ak.at(i, j).num;  // integer matrix, denominator stays 1
}

}  // namespace graphlib
