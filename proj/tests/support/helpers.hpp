#pragma once

#include <cmath>

#include "ftsent/invariants.hpp"
#include "ftsent/rng.hpp"
#include "ftsent/state.hpp"

namespace ftsent::testing {

inline Complex random_complex(SplitMix64& rng) {
    return {rng.uniform_pm1(), rng.uniform_pm1()};
}

inline GaussianRational random_gaussian_rational(SplitMix64& rng) {
    auto small_int = [&rng] { return static_cast<int>(rng.next() % 19) - 9; };
    auto small_den = [&rng] { return static_cast<int>(rng.next() % 8) + 1; };
    return {Rational(small_int(), small_den()), Rational(small_int(), small_den())};
}

template <class F>
F random_scalar(SplitMix64& rng) {
    if constexpr (scalar_traits<F>::is_exact)
        return random_gaussian_rational(rng);
    else
        return random_complex(rng);
}

template <class F>
JordanElement<F> random_jordan(SplitMix64& rng) {
    return {random_scalar<F>(rng), random_scalar<F>(rng), random_scalar<F>(rng)};
}

template <class F>
FtsElement<F> random_fts(SplitMix64& rng) {
    FtsElement<F> x;
    x.alpha = random_scalar<F>(rng);
    x.beta = random_scalar<F>(rng);
    x.a_part = random_jordan<F>(rng);
    x.b_part = random_jordan<F>(rng);
    return x;
}

template <class F>
ThreeQubitState<F> random_state(SplitMix64& rng) {
    ThreeQubitState<F> s;
    for (int i = 0; i < 8; ++i) s[i] = random_scalar<F>(rng);
    return s;
}

inline ThreeQubitState<Complex> random_real_state(SplitMix64& rng) {
    ThreeQubitState<Complex> s;
    for (int i = 0; i < 8; ++i) s[i] = Complex(rng.uniform_pm1(), 0.0);
    return s;
}

inline double dist(const Complex& a, const Complex& b) { return std::abs(a - b); }

template <class F>
double max_abs_diff(const ThreeQubitState<F>& a, const ThreeQubitState<F>& b) {
    double m = 0.0;
    for (int i = 0; i < 8; ++i)
        m = std::max(m, std::sqrt(scalar_traits<F>::to_double(scalar_traits<F>::abs_sq(a[i] - b[i]))));
    return m;
}

template <class F>
double max_abs_diff(const FtsElement<F>& a, const FtsElement<F>& b) {
    auto va = a.to_array();
    auto vb = b.to_array();
    double m = 0.0;
    for (int i = 0; i < kFtsDim; ++i)
        m = std::max(m, std::sqrt(scalar_traits<F>::to_double(scalar_traits<F>::abs_sq(
                            va[static_cast<std::size_t>(i)] - vb[static_cast<std::size_t>(i)]))));
    return m;
}

inline double max_abs_gamma_diff(const SmallMatrix<Complex, 2>& a, const SmallMatrix<Complex, 2>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.m.size(); ++k) m = std::max(m, std::abs(a.m[k] - b.m[k]));
    return m;
}

// ---- independent oracles (test-only) ----

/// Trilinear coefficient extraction: the xyz coefficient of N(xA + yB + zC)
/// is 6 N(A,B,C) and equals (1/8) sum over sign triples s of
/// s1 s2 s3 N(s1 A + s2 B + s3 C). Evaluates N at 8 points none of which the
/// 6-term linearisation formula touches, so it is an independent route to
/// N(A,B,C).
template <class F>
F linearized_norm_oracle(const JordanElement<F>& a, const JordanElement<F>& b,
                         const JordanElement<F>& c) {
    F total{};
    for (int mask = 0; mask < 8; ++mask) {
        F s1((mask & 1) ? -1 : 1), s2((mask & 2) ? -1 : 1), s3((mask & 4) ? -1 : 1);
        F term = cubic_norm(s1 * a + s2 * b + s3 * c);
        total = total + s1 * s2 * s3 * term;
    }
    return total / F(48);
}

/// Same extraction at degree 4: q(x,y,w,z) = (1/384) sum over sign quadruples
/// of s1 s2 s3 s4 q(s1 x + s2 y + s3 w + s4 z).
template <class F>
F quartic_linearized_oracle(const FtsElement<F>& x, const FtsElement<F>& y, const FtsElement<F>& w,
                            const FtsElement<F>& z) {
    F total{};
    for (int mask = 0; mask < 16; ++mask) {
        F s1((mask & 1) ? -1 : 1), s2((mask & 2) ? -1 : 1), s3((mask & 4) ? -1 : 1),
            s4((mask & 8) ? -1 : 1);
        F term = quartic_norm(s1 * x + s2 * y + s3 * w + s4 * z);
        total = total + s1 * s2 * s3 * s4 * term;
    }
    return total / F(384);
}

/// Gamma matrices by the raw epsilon contraction
/// (gamma^A)_{A1 A2} = e^{B1 B2} e^{C1 C2} a_{A1 B1 C1} a_{A2 B2 C2} etc.,
/// as an independent check of the explicit decimal-index entries.
template <class F>
GammaTriple<F> gamma_contraction_oracle(const ThreeQubitState<F>& s) {
    GammaTriple<F> g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            F ga{}, gb{}, gc{};
            for (int u1 = 0; u1 < 2; ++u1)
                for (int u2 = 0; u2 < 2; ++u2)
                    for (int v1 = 0; v1 < 2; ++v1)
                        for (int v2 = 0; v2 < 2; ++v2) {
                            int sign = kEpsilon[u1][u2] * kEpsilon[v1][v2];
                            if (sign == 0) continue;
                            F fa = s.at(i, u1, v1) * s.at(j, u2, v2);
                            F fb = s.at(u1, i, v1) * s.at(u2, j, v2);
                            F fc = s.at(u1, v1, i) * s.at(u2, v2, j);
                            if (sign > 0) {
                                ga += fa; gb += fb; gc += fc;
                            } else {
                                ga = ga - fa; gb = gb - fb; gc = gc - fc;
                            }
                        }
            g.a(i, j) = ga;
            g.b(i, j) = gb;
            g.c(i, j) = gc;
        }
    return g;
}

}  // namespace ftsent::testing
