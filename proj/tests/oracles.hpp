#pragma once

// Reference computations for tests: brute-force arithmetic, plain Gaussian
// elimination, Faddeev-LeVerrier, and floating-point spectra from Eigen. Only
// the Graph container and exact polynomial arithmetic are shared with the
// code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "walkper/graph.hpp"
#include "walkper/grover.hpp"
#include "walkper/matrix.hpp"
#include "walkper/polynomial.hpp"
#include "walkper/rational.hpp"

namespace oracle {

using walkper::Graph;
using walkper::Polynomial;
using walkper::Rational;
using walkper::RationalMatrix;

inline std::int64_t phi(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    return count;
}

inline int mu(std::int64_t n) {
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

inline std::int64_t smallest_prime(std::int64_t n) {
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

/// Rank by plain rational Gaussian elimination.
inline std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// det(xI - m) by Faddeev-LeVerrier over the rationals.
inline Polynomial char_poly_leverrier(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix mk = RationalMatrix::identity(n);  // M_1 = I
    for (std::size_t k = 1; k <= n; ++k) {
        const RationalMatrix am = a * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(long(k));
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
    }
    return Polynomial(c);
}

inline Eigen::MatrixXd adjacency(const Graph& g) {
    const auto n = Eigen::Index(g.vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (g.adjacent(walkper::Vertex(u), walkper::Vertex(v))) a(Eigen::Index(u), Eigen::Index(v)) = 1;
    return a;
}

/// Eigenvalues of D^-1/2 A D^-1/2, ascending.
inline std::vector<double> t_eigenvalues(const Graph& g) {
    Eigen::MatrixXd a = adjacency(g);
    const auto n = a.rows();
    const Eigen::VectorXd deg = a.rowwise().sum();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (a(i, j) != 0) a(i, j) /= std::sqrt(deg(i) * deg(j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

/// U built from the definition over arcs sorted by (origin, terminus).
inline Eigen::MatrixXd grover_matrix(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (g.adjacent(walkper::Vertex(u), walkper::Vertex(v))) arcs.emplace_back(u, v);
    std::vector<double> deg(g.vertex_count(), 0);
    for (auto [u, v] : arcs) deg[u] += 1;
    const auto m = Eigen::Index(arcs.size());
    Eigen::MatrixXd u_mat = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b) {
            const auto [oa, ta] = arcs[std::size_t(a)];
            const auto [ob, tb] = arcs[std::size_t(b)];
            if (tb != oa) continue;
            u_mat(a, b) = 2.0 / deg[tb] - ((ta == ob) ? 1.0 : 0.0);
        }
    return u_mat;
}

inline std::vector<std::complex<double>> u_eigenvalues(const Graph& g) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(grover_matrix(g), false);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

/// Greedy multiset matching with tolerance.
inline bool multiset_close(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        std::size_t best = b.size();
        double best_d = tol;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(x - b[i]);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        if (best == b.size()) return false;
        used[best] = true;
    }
    return true;
}

/// G(n, p) with a fixed seed; not necessarily connected.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<walkper::Vertex, walkper::Vertex>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(walkper::Vertex(u), walkper::Vertex(v));
    return Graph::from_edges(n, edges);
}

/// Random connected graph: random spanning tree plus G(n, p) edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::set<std::pair<walkper::Vertex, walkper::Vertex>> edges;
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        const auto u = pick(rng);
        edges.emplace(walkper::Vertex(u), walkper::Vertex(v));
    }
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace(walkper::Vertex(u), walkper::Vertex(v));
    std::vector<std::pair<walkper::Vertex, walkper::Vertex>> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

struct SrgParams {
    bool is_srg = false;
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
};

/// SRG parameters from common-neighbour counts. Complete and edgeless graphs are not SRG.
inline SrgParams srg_by_counting(const Graph& g) {
    SrgParams p;
    const std::size_t n = g.vertex_count();
    std::int64_t k = -1, lam = -1, m = -1;
    bool has_adjacent = false, has_nonadjacent = false;
    for (std::size_t u = 0; u < n; ++u) {
        std::int64_t deg = 0;
        for (std::size_t w = 0; w < n; ++w) deg += g.adjacent(walkper::Vertex(u), walkper::Vertex(w));
        if (k >= 0 && deg != k) return p;
        k = deg;
        for (std::size_t v = u + 1; v < n; ++v) {
            std::int64_t common = 0;
            for (std::size_t w = 0; w < n; ++w)
                common += g.adjacent(walkper::Vertex(u), walkper::Vertex(w)) &&
                          g.adjacent(walkper::Vertex(v), walkper::Vertex(w));
            std::int64_t& slot = g.adjacent(walkper::Vertex(u), walkper::Vertex(v)) ? lam : m;
            (g.adjacent(walkper::Vertex(u), walkper::Vertex(v)) ? has_adjacent : has_nonadjacent) = true;
            if (slot >= 0 && slot != common) return p;
            slot = common;
        }
    }
    if (!has_adjacent || !has_nonadjacent) return p;
    return {true, std::int64_t(n), k, lam, m};
}

/// Roots of p with multiplicity: exact squarefree decomposition (Yun), then a
/// companion-matrix eigensolve per squarefree factor.
inline std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
    std::vector<std::complex<double>> out;
    if (p.degree() < 1) return out;
    auto exact_div = [](const Polynomial& a, const Polynomial& b) { return walkper::divmod(a, b).first; };
    auto squarefree_roots = [&](const Polynomial& f, unsigned mult) {
        const int d = f.degree();
        if (d < 1) return;
        const Polynomial m = f.monic();
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
        for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < d; ++i) companion(i, d - 1) = -m.coeff(i).get_d();
        Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
        for (Eigen::Index i = 0; i < d; ++i)
            for (unsigned k = 0; k < mult; ++k) out.push_back(es.eigenvalues()(i));
    };
    const Polynomial dp = p.derivative();
    const Polynomial b = walkper::gcd(p, dp);
    Polynomial c = exact_div(p, b);
    Polynomial d = exact_div(dp, b) - c.derivative();
    for (unsigned i = 1; c.degree() > 0; ++i) {
        const Polynomial a = walkper::gcd(c, d);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
        squarefree_roots(a, i);
    }
    return out;
}

/// Spec(U) predicted from a report: e^{+-i arccos l} for each T-eigenvalue
/// |l| < 1, l itself for l = +-1, then 1^{M1} and (-1)^{M-1}.
inline std::vector<std::complex<double>> mapped_u_spectrum(const walkper::SpectrumReport& r) {
    std::vector<double> t_values;
    for (const auto& id : r.t_eigen_ids)
        for (unsigned i = 0; i < id.multiplicity; ++i) t_values.push_back(id.label.value());
    for (const auto& z : polynomial_roots(r.t_unidentified)) t_values.push_back(z.real());
    std::vector<std::complex<double>> out;
    for (double l : t_values) {
        if (std::abs(l - 1.0) < 1e-12 || std::abs(l + 1.0) < 1e-12) {
            out.emplace_back(std::round(l), 0.0);
        } else {
            const double theta = std::acos(std::clamp(l, -1.0, 1.0));
            out.push_back(std::polar(1.0, theta));
            out.push_back(std::polar(1.0, -theta));
        }
    }
    for (std::int64_t i = 0; i < r.m_plus; ++i) out.emplace_back(1.0, 0.0);
    for (std::int64_t i = 0; i < r.m_minus; ++i) out.emplace_back(-1.0, 0.0);
    return out;
}

}  // namespace oracle
