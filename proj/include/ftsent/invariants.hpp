#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ftsent/state.hpp"

namespace ftsent {

/// Dense row-major N x N matrix of scalars; N = 2 for local operators and
/// gamma covariants, N = 4 for two-party density matrices.
template <class F, int N>
struct SmallMatrix {
    std::array<F, static_cast<std::size_t>(N) * N> m{};

    F& operator()(int i, int j) { return m[static_cast<std::size_t>(i * N + j)]; }
    const F& operator()(int i, int j) const { return m[static_cast<std::size_t>(i * N + j)]; }

    static SmallMatrix identity() {
        SmallMatrix r;
        for (int i = 0; i < N; ++i) r(i, i) = F(1);
        return r;
    }

    friend SmallMatrix operator+(const SmallMatrix& a, const SmallMatrix& b) {
        SmallMatrix r;
        for (std::size_t k = 0; k < a.m.size(); ++k) r.m[k] = a.m[k] + b.m[k];
        return r;
    }
    friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
        SmallMatrix r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                F acc{};
                for (int k = 0; k < N; ++k) acc += a(i, k) * b(k, j);
                r(i, j) = acc;
            }
        return r;
    }
    friend bool operator==(const SmallMatrix& a, const SmallMatrix& b) { return a.m == b.m; }
};

template <class F>
F det2(const SmallMatrix<F, 2>& g) {
    return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
}

template <class F, int N>
F trace_of(const SmallMatrix<F, N>& g) {
    F t{};
    for (int i = 0; i < N; ++i) t += g(i, i);
    return t;
}

template <class F, int N>
double max_abs(const SmallMatrix<F, N>& g) {
    double m = 0.0;
    for (const auto& v : g.m) m = std::max(m, std::sqrt(scalar_traits<F>::to_double(scalar_traits<F>::abs_sq(v))));
    return m;
}

/// The SL(2)-invariant alternating tensor, eps^{01} = +1.
inline constexpr int kEpsilon[2][2] = {{0, 1}, {-1, 0}};

/// The three symmetric quadratic covariants gamma^A, gamma^B, gamma^C,
/// transforming as (3,1,1), (1,3,1), (1,1,3). det of each equals q/2.
template <class F>
struct GammaTriple {
    SmallMatrix<F, 2> a, b, c;

    const SmallMatrix<F, 2>& operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

/// Explicit decimal-index entries, e.g. (gamma^A)_00 = 2(a0 a3 - a1 a2).
template <class F>
GammaTriple<F> gamma_matrices(const ThreeQubitState<F>& s) {
    const F two(2);
    GammaTriple<F> g;
    g.a(0, 0) = two * (s[0] * s[3] - s[1] * s[2]);
    g.a(0, 1) = s[0] * s[7] - s[1] * s[6] + s[4] * s[3] - s[5] * s[2];
    g.a(1, 0) = g.a(0, 1);
    g.a(1, 1) = two * (s[4] * s[7] - s[5] * s[6]);

    g.b(0, 0) = two * (s[0] * s[5] - s[4] * s[1]);
    g.b(0, 1) = s[0] * s[7] - s[4] * s[3] + s[2] * s[5] - s[6] * s[1];
    g.b(1, 0) = g.b(0, 1);
    g.b(1, 1) = two * (s[2] * s[7] - s[6] * s[3]);

    g.c(0, 0) = two * (s[0] * s[6] - s[2] * s[4]);
    g.c(0, 1) = s[0] * s[7] - s[2] * s[5] + s[1] * s[6] - s[3] * s[4];
    g.c(1, 0) = g.c(0, 1);
    g.c(1, 1) = two * (s[1] * s[7] - s[3] * s[5]);
    return g;
}

enum class Party { A, B, C };
enum class PartyPair { AB, BC, CA };

/// Doubly reduced density matrix rho_X = Tr_{YZ} |psi><psi| (2x2, Hermitian,
/// trace = |psi|^2).
template <class F>
SmallMatrix<F, 2> reduced_density(const ThreeQubitState<F>& s, Party keep) {
    using T = scalar_traits<F>;
    SmallMatrix<F, 2> rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            F acc{};
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v) {
                    switch (keep) {
                        case Party::A: acc += s.at(i, u, v) * T::conjugate(s.at(j, u, v)); break;
                        case Party::B: acc += s.at(u, i, v) * T::conjugate(s.at(u, j, v)); break;
                        case Party::C: acc += s.at(u, v, i) * T::conjugate(s.at(u, v, j)); break;
                    }
                }
            rho(i, j) = acc;
        }
    return rho;
}

/// Singly reduced density matrix, 4x4 with first-party-major composite index
/// (e.g. AB: row 2A + B).
template <class F>
SmallMatrix<F, 4> reduced_density(const ThreeQubitState<F>& s, PartyPair keep) {
    using T = scalar_traits<F>;
    SmallMatrix<F, 4> rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    F acc{};
                    for (int t = 0; t < 2; ++t) {
                        switch (keep) {
                            case PartyPair::AB: acc += s.at(i, j, t) * T::conjugate(s.at(k, l, t)); break;
                            case PartyPair::BC: acc += s.at(t, i, j) * T::conjugate(s.at(t, k, l)); break;
                            case PartyPair::CA: acc += s.at(j, t, i) * T::conjugate(s.at(l, t, k)); break;
                        }
                    }
                    rho(2 * i + j, 2 * k + l) = acc;
                }
    return rho;
}

/// Local entropies S_X = 4 det rho_X; each >= 0, zero iff party X factors out.
template <class F>
std::array<typename scalar_traits<F>::real_type, 3> local_entropies(const ThreeQubitState<F>& s) {
    using T = scalar_traits<F>;
    std::array<typename T::real_type, 3> out;
    const Party parties[3] = {Party::A, Party::B, Party::C};
    for (int i = 0; i < 3; ++i) {
        auto rho = reduced_density(s, parties[i]);
        // Hermitian 2x2: determinant is real.
        out[static_cast<std::size_t>(i)] = typename T::real_type(4) * T::real(det2(rho));
    }
    return out;
}

enum class KempeForm { AB, BC, CA };

/// Kempe invariant K = tr(rho_X (x) rho_Y rho_XY) - tr(rho_X^3) - tr(rho_Y^3);
/// the three party-pair forms agree identically.
template <class F>
typename scalar_traits<F>::real_type kempe(const ThreeQubitState<F>& s,
                                           KempeForm form = KempeForm::AB) {
    using T = scalar_traits<F>;
    Party x{}, y{};
    PartyPair xy{};
    switch (form) {
        case KempeForm::AB: x = Party::A; y = Party::B; xy = PartyPair::AB; break;
        case KempeForm::BC: x = Party::B; y = Party::C; xy = PartyPair::BC; break;
        case KempeForm::CA: x = Party::C; y = Party::A; xy = PartyPair::CA; break;
    }
    auto rx = reduced_density(s, x);
    auto ry = reduced_density(s, y);
    auto rxy = reduced_density(s, xy);

    SmallMatrix<F, 4> kron;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) kron(2 * i + j, 2 * k + l) = rx(i, k) * ry(j, l);

    F t1 = trace_of(kron * rxy);
    F t2 = trace_of(rx * rx * rx);
    F t3 = trace_of(ry * ry * ry);
    return T::real(t1 - t2 - t3);
}

/// Cayley hyperdeterminant via the FTS route: Det a = -q(Psi)/2.
template <class F>
F hyperdet(const ThreeQubitState<F>& s) {
    return quartic_norm(to_fts(s)) / F(-2);
}

/// Ground-truth hyperdeterminant by literal epsilon contraction over all 12
/// binary indices (4096 terms):
///   Det a = -1/2 e^{A1A2} e^{B1B2} e^{A3A4} e^{B3B4} e^{C1C4} e^{C2C3}
///           a_{A1B1C1} a_{A2B2C2} a_{A3B3C3} a_{A4B4C4}.
/// Retained in the library as the O(4096) fallback oracle.
template <class F>
F hyperdet_oracle(const ThreeQubitState<F>& s) {
    F acc{};
    for (int a1 = 0; a1 < 2; ++a1)
     for (int a2 = 0; a2 < 2; ++a2)
      for (int a3 = 0; a3 < 2; ++a3)
       for (int a4 = 0; a4 < 2; ++a4)
        for (int b1 = 0; b1 < 2; ++b1)
         for (int b2 = 0; b2 < 2; ++b2)
          for (int b3 = 0; b3 < 2; ++b3)
           for (int b4 = 0; b4 < 2; ++b4)
            for (int c1 = 0; c1 < 2; ++c1)
             for (int c2 = 0; c2 < 2; ++c2)
              for (int c3 = 0; c3 < 2; ++c3)
               for (int c4 = 0; c4 < 2; ++c4) {
                   int sign = kEpsilon[a1][a2] * kEpsilon[b1][b2] * kEpsilon[a3][a4] *
                              kEpsilon[b3][b4] * kEpsilon[c1][c4] * kEpsilon[c2][c3];
                   if (sign == 0) continue;
                   F term = s.at(a1, b1, c1) * s.at(a2, b2, c2) * s.at(a3, b3, c3) *
                            s.at(a4, b4, c4);
                   acc = (sign > 0) ? acc + term : acc - term;
               }
    return acc / F(-2);
}

/// 3-tangle tau = 4 |Det a|; display quantity, reported as double in both
/// backends.
template <class F>
double three_tangle(const ThreeQubitState<F>& s) {
    using T = scalar_traits<F>;
    return 4.0 * std::sqrt(T::to_double(T::abs_sq(hyperdet(s))));
}

enum class TForm { A, B, C };

/// Triple-product fast path T(Psi,Psi,Psi) through the gamma covariants;
/// the three index forms produce the same tensor, e.g. the A-form
///   T_{A3 B C} = e^{A1 A2} a_{A1 B C} (gamma^A)_{A2 A3}.
/// Agrees with from_fts(triple_product(x,x,x)) with proportionality
/// kTripleFastKappa.
template <class F>
ThreeQubitState<F> t_cubic_fast(const ThreeQubitState<F>& s, TForm form = TForm::A) {
    GammaTriple<F> g = gamma_matrices(s);
    ThreeQubitState<F> t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                F acc{};
                for (int u = 0; u < 2; ++u)
                    for (int v = 0; v < 2; ++v) {
                        int sign = kEpsilon[u][v];
                        if (sign == 0) continue;
                        F term{};
                        switch (form) {
                            case TForm::A: term = s.at(u, j, k) * g.a(v, i); break;
                            case TForm::B: term = s.at(i, u, k) * g.b(v, j); break;
                            case TForm::C: term = s.at(i, j, u) * g.c(v, k); break;
                        }
                        acc = (sign > 0) ? acc + term : acc - term;
                    }
                t.at(i, j, k) = acc;
            }
    return t;
}

// Calibration constants, measured once against the brute-force oracles on
// random states and frozen (see tests/test_invariants.cpp and the README
// calibration note). Conventions: S_X = 4 det rho_X, gammas as above.
//   S_A    = kEntropyGammaC1 * [tr g^B+ g^B + tr g^C+ g^C]   (c1; quoted elsewhere as 4)
//   tr g^A+ g^A = kEntropyGammaC2 * [S_B + S_C - S_A]        (c2; quoted elsewhere as 1/8)
//   t_cubic_fast = kTripleFastKappa * from_fts(T(x,x,x))
inline constexpr double kEntropyGammaC1 = 1.0;
inline constexpr double kEntropyGammaC2 = 0.5;
inline constexpr double kTripleFastKappa = 1.0;

/// Residual report for the entropy-gamma structural relations with the
/// calibrated constants.
struct EntropyGammaReport {
    std::array<double, 3> entropy;        // S_A, S_B, S_C
    std::array<double, 3> gamma_norm;     // tr gamma^X+ gamma^X
    std::array<double, 3> resid_entropy;  // S_X - c1 (gn_Y + gn_Z)
    std::array<double, 3> resid_gamma;    // gn_X - c2 (S_Y + S_Z - S_X)
    double max_resid;
};

template <class F>
EntropyGammaReport entropy_gamma_relations(const ThreeQubitState<F>& s) {
    using T = scalar_traits<F>;
    auto S = local_entropies(s);
    GammaTriple<F> g = gamma_matrices(s);
    EntropyGammaReport r{};
    for (int i = 0; i < 3; ++i) {
        double gn = 0.0;
        for (const auto& v : g[i].m) gn += T::to_double(T::abs_sq(v));
        r.gamma_norm[static_cast<std::size_t>(i)] = gn;
        r.entropy[static_cast<std::size_t>(i)] = T::to_double(S[static_cast<std::size_t>(i)]);
    }
    r.max_resid = 0.0;
    for (int i = 0; i < 3; ++i) {
        int y = (i + 1) % 3, z = (i + 2) % 3;
        r.resid_entropy[static_cast<std::size_t>(i)] =
            r.entropy[static_cast<std::size_t>(i)] -
            kEntropyGammaC1 * (r.gamma_norm[static_cast<std::size_t>(y)] + r.gamma_norm[static_cast<std::size_t>(z)]);
        r.resid_gamma[static_cast<std::size_t>(i)] =
            r.gamma_norm[static_cast<std::size_t>(i)] -
            kEntropyGammaC2 * (r.entropy[static_cast<std::size_t>(y)] + r.entropy[static_cast<std::size_t>(z)] -
                               r.entropy[static_cast<std::size_t>(i)]);
        r.max_resid = std::max({r.max_resid, std::abs(r.resid_entropy[static_cast<std::size_t>(i)]),
                                std::abs(r.resid_gamma[static_cast<std::size_t>(i)])});
    }
    return r;
}

/// Diagnostic for the quoted <T> relation
///   <T> = 2/3 (K - |psi|^6) + 1/16 |psi|^2 (S_A + S_B + S_C).
/// The meaning of <T> is underdetermined; we evaluate the candidate readings
/// below and report residuals without asserting the relation (it fails at the
/// GHZ representative for every candidate: <T|T> = 1/4 vs RHS = -31/48).
struct TKempeReport {
    double t_norm_sq;         // <T|T>, Hermitian norm of the T tensor (default reading)
    double state_overlap_abs; // |<psi|T>|
    double rhs;               // quoted right-hand side
    double resid_t_norm;      // t_norm_sq - rhs
    double resid_overlap;     // state_overlap_abs - rhs
};

template <class F>
TKempeReport t_kempe_relation(const ThreeQubitState<F>& s) {
    using T = scalar_traits<F>;
    auto t = t_cubic_fast(s);
    double tn = T::to_double(norm_sq(t));
    F overlap{};
    for (int i = 0; i < 8; ++i) overlap += T::conjugate(s[i]) * t[i];
    double ov = std::sqrt(T::to_double(T::abs_sq(overlap)));

    double n2 = T::to_double(norm_sq(s));
    double k = T::to_double(kempe(s));
    auto S = local_entropies(s);
    double ssum = T::to_double(S[0]) + T::to_double(S[1]) + T::to_double(S[2]);
    double rhs = (2.0 / 3.0) * (k - n2 * n2 * n2) + (1.0 / 16.0) * n2 * ssum;

    return {tn, ov, rhs, tn - rhs, ov - rhs};
}

/// The six local-unitary invariants plus the FTS quartic norm.
template <class F>
struct InvariantReport {
    using real_type = typename scalar_traits<F>::real_type;
    real_type norm_sq{};
    std::array<real_type, 3> entropies{};
    real_type kempe{};
    double tangle{};  // 4 |Det a|
    F hyperdet{};
    F q{};            // = -2 Det a
};

template <class F>
InvariantReport<F> compute_invariants(const ThreeQubitState<F>& s) {
    InvariantReport<F> r;
    r.norm_sq = norm_sq(s);
    r.entropies = local_entropies(s);
    r.kempe = kempe(s);
    r.q = quartic_norm(to_fts(s));
    r.hyperdet = r.q / F(-2);
    r.tangle = three_tangle(s);
    return r;
}

}  // namespace ftsent
