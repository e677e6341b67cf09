#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "ftsent/classifier.hpp"
#include "ftsent/invariants.hpp"
#include "ftsent/rng.hpp"

namespace ftsent {

/// One SL(2) factor per party; each must be unimodular.
template <class F>
struct LocalOperator {
    SmallMatrix<F, 2> op_a = SmallMatrix<F, 2>::identity();
    SmallMatrix<F, 2> op_b = SmallMatrix<F, 2>::identity();
    SmallMatrix<F, 2> op_c = SmallMatrix<F, 2>::identity();
};

/// a'_{A'B'C'} = (op_a)_{A'A} (op_b)_{B'B} (op_c)_{C'C} a_{ABC}.
/// Throws if any factor fails the determinant-1 precondition (exact backend:
/// exact equality; float: |det - 1| <= det_tol).
template <class F>
ThreeQubitState<F> apply_slocc(const LocalOperator<F>& g, const ThreeQubitState<F>& s,
                               double det_tol = 1e-9) {
    using T = scalar_traits<F>;
    const SmallMatrix<F, 2>* ops[3] = {&g.op_a, &g.op_b, &g.op_c};
    for (const auto* op : ops) {
        F d = det2(*op);
        if constexpr (T::is_exact) {
            if (!(d == F(1))) throw std::invalid_argument("apply_slocc: factor determinant != 1");
        } else {
            if (detail::magnitude(d - F(1)) > det_tol)
                throw std::invalid_argument("apply_slocc: factor determinant != 1");
        }
    }
    ThreeQubitState<F> r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                F acc{};
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y)
                        for (int z = 0; z < 2; ++z)
                            acc += g.op_a(a, x) * g.op_b(b, y) * g.op_c(c, z) * s.at(x, y, z);
                r.at(a, b, c) = acc;
            }
    return r;
}

namespace detail {

inline double condition_number_2x2(const SmallMatrix<Complex, 2>& m) {
    // Singular values of a 2x2 from the Gram matrix eigenvalues.
    double g00 = std::norm(m(0, 0)) + std::norm(m(1, 0));
    double g11 = std::norm(m(0, 1)) + std::norm(m(1, 1));
    Complex g01 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
    double tr = g00 + g11;
    double disc = std::sqrt(std::max(0.0, (g00 - g11) * (g00 - g11) + 4.0 * std::norm(g01)));
    double lo = (tr - disc) / 2.0;
    double hi = (tr + disc) / 2.0;
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(hi / lo);
}

}  // namespace detail

/// Seeded random SL(2,C)^3 element: entries uniform in [-spread, spread]^2,
/// near-singular draws (|det| < 1e-6) resampled, each factor scaled to
/// determinant 1, factors with condition number > max_condition resampled.
/// Deterministic in the seed.
inline LocalOperator<Complex> random_slocc(std::uint64_t seed, double spread = 1.0,
                                           double max_condition = 1e3) {
    SplitMix64 rng(seed);
    LocalOperator<Complex> g;
    SmallMatrix<Complex, 2>* ops[3] = {&g.op_a, &g.op_b, &g.op_c};
    for (auto* op : ops) {
        while (true) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    (*op)(i, j) = spread * Complex(rng.uniform_pm1(), rng.uniform_pm1());
            Complex d = det2(*op);
            if (std::abs(d) < 1e-6) continue;
            Complex scale = 1.0 / std::sqrt(d);
            for (auto& v : op->m) v *= scale;
            if (detail::condition_number_2x2(*op) <= max_condition) break;
        }
    }
    return g;
}

/// Seeded random SL(2,R)^3 element (identity component: draws are resampled
/// until det >= 1e-6 before scaling). Entries are Complex with zero
/// imaginary part so real states stay exactly real.
inline LocalOperator<Complex> random_sl2r(std::uint64_t seed, double spread = 1.0,
                                          double max_condition = 1e3) {
    SplitMix64 rng(seed);
    LocalOperator<Complex> g;
    SmallMatrix<Complex, 2>* ops[3] = {&g.op_a, &g.op_b, &g.op_c};
    for (auto* op : ops) {
        while (true) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    (*op)(i, j) = Complex(spread * rng.uniform_pm1(), 0.0);
            double d = det2(*op).real();
            if (d < 1e-6) continue;
            double scale = 1.0 / std::sqrt(d);
            for (auto& v : op->m) v = Complex(v.real() * scale, 0.0);
            if (detail::condition_number_2x2(*op) <= max_condition) break;
        }
    }
    return g;
}

/// Lie algebra element of sl(2)^3 in the standard tensor parametrization:
/// one traceless 2x2 per party.
template <class F>
struct AlgebraElementStd {
    SmallMatrix<F, 2> e_a, e_b, e_c;
};

/// Derivative of the group action at the identity:
/// (delta a)_{ABC} = (e_a)_{AA'} a_{A'BC} + (e_b)_{BB'} a_{AB'C} + (e_c)_{CC'} a_{ABC'}.
template <class F>
ThreeQubitState<F> std_algebra_action(const AlgebraElementStd<F>& e, const ThreeQubitState<F>& s) {
    ThreeQubitState<F> r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                F acc{};
                for (int x = 0; x < 2; ++x) {
                    acc += e.e_a(a, x) * s.at(x, b, c);
                    acc += e.e_b(b, x) * s.at(a, x, c);
                    acc += e.e_c(c, x) * s.at(a, b, x);
                }
                r.at(a, b, c) = acc;
            }
    return r;
}

/// Algebra element in FTS coordinates: a structure-algebra part acting by
/// left Jordan multiplication L_C plus two Jordan translations X, Y
/// (9 parameters; the derivation part is empty for F+F+F).
template <class F>
struct AlgebraElementFts {
    JordanElement<F> c_mult, x_down, y_up;
};

/// Infinitesimal action on (alpha, beta, A, B):
///   alpha' = -alpha tr C + Tr(X, B)
///   beta'  =  beta tr C + Tr(Y, A)
///   A'     =  C o A + beta X + Y x B
///   B'     = -C o B + alpha Y + X x A.
template <class F>
FtsElement<F> fts_algebra_action(const AlgebraElementFts<F>& e, const FtsElement<F>& x) {
    FtsElement<F> r;
    F trc = trace(e.c_mult);
    r.alpha = -(x.alpha * trc) + trace_form(e.x_down, x.b_part);
    r.beta = x.beta * trc + trace_form(e.y_up, x.a_part);
    r.a_part = jordan_product(e.c_mult, x.a_part) + x.beta * e.x_down + cross(e.y_up, x.b_part);
    r.b_part = -jordan_product(e.c_mult, x.b_part) + x.alpha * e.y_up + cross(e.x_down, x.a_part);
    return r;
}

/// Basis of sl(2)^3, factor-major: per party [h, e, f] with
/// h = diag(1,-1), e = upper off-diagonal, f = lower off-diagonal.
/// Index k = 3 * party + {0:h, 1:e, 2:f}.
template <class F>
AlgebraElementStd<F> std_algebra_basis(int k) {
    SmallMatrix<F, 2> m;
    switch (k % 3) {
        case 0: m(0, 0) = F(1); m(1, 1) = -F(1); break;
        case 1: m(0, 1) = F(1); break;
        default: m(1, 0) = F(1); break;
    }
    AlgebraElementStd<F> e{};
    if (k / 3 == 0)
        e.e_a = m;
    else if (k / 3 == 1)
        e.e_b = m;
    else
        e.e_c = m;
    return e;
}

/// Basis of the FTS-coordinate algebra: k = 0..2 -> C = unit vectors,
/// 3..5 -> X, 6..8 -> Y.
template <class F>
AlgebraElementFts<F> fts_algebra_basis(int k) {
    AlgebraElementFts<F> e{};
    if (k < 3)
        e.c_mult = JordanElement<F>::basis(k);
    else if (k < 6)
        e.x_down = JordanElement<F>::basis(k - 3);
    else
        e.y_up = JordanElement<F>::basis(k - 6);
    return e;
}

/// Numerical rank of a tangent-space map, with the singular-value gap that
/// certifies it. Orbit dimensions are exact integers; a gapless spectrum is
/// reported as indeterminate rather than rounded.
struct RankResult {
    int dim = 0;
    double gap_ratio = 0.0;  // sigma_rank / sigma_rank+1 (inf when the tail is zero)
    bool determinate = false;
};

/// Rank of the 8x9 map e -> std_algebra_action(e, s) over the sl(2,C)^3
/// basis. Expected at the class representatives: 4, 5, 7, 7.
RankResult orbit_dimension(const ThreeQubitState<Complex>& s, double sv_eps = 1e-8,
                           double gap_requirement = 1e3);

/// Rank of the same span augmented by s itself, minus one (ray orbits).
RankResult projective_orbit_dimension(const ThreeQubitState<Complex>& s, double sv_eps = 1e-8,
                                      double gap_requirement = 1e3);

inline int stabilizer_dimension(const RankResult& orbit) { return 9 - orbit.dim; }

/// Real orbit dimension over sl(2,R)^3 for a real-amplitude state.
RankResult real_orbit_dimension(const ThreeQubitState<Complex>& s, double sv_eps = 1e-8,
                                double gap_requirement = 1e3);

/// Cross-check that the standard and FTS-coordinate parametrizations span
/// the same tangent space at s.
struct SpanCompareReport {
    int std_rank = 0;
    int fts_rank = 0;
    double max_residual = 0.0;
    bool ok = false;
};

SpanCompareReport action_span_compare(const ThreeQubitState<Complex>& s, double tol = 1e-9);

/// Orthonormal kernel basis of the FTS-coordinate action at s, as coefficient
/// vectors over fts_algebra_basis (the stabilizer subalgebra).
std::vector<std::array<Complex, 9>> fts_stabilizer_kernel(const ThreeQubitState<Complex>& s,
                                                          double sv_eps = 1e-8);

}  // namespace ftsent
