#pragma once

#include <array>

#include "ftsent/jordan.hpp"

namespace ftsent {

inline constexpr int kFtsDim = 8;

/// Element of the Freudenthal triple system M(J) = F + F + J + J, written as
/// the 2x2 array (alpha, A; B, beta).
template <class F>
struct FtsElement {
    F alpha{};
    F beta{};
    JordanElement<F> a_part{};
    JordanElement<F> b_part{};

    static FtsElement zero() { return {}; }

    friend FtsElement operator+(const FtsElement& x, const FtsElement& y) {
        return {x.alpha + y.alpha, x.beta + y.beta, x.a_part + y.a_part, x.b_part + y.b_part};
    }
    friend FtsElement operator-(const FtsElement& x, const FtsElement& y) {
        return {x.alpha - y.alpha, x.beta - y.beta, x.a_part - y.a_part, x.b_part - y.b_part};
    }
    friend FtsElement operator-(const FtsElement& x) {
        return {-x.alpha, -x.beta, -x.a_part, -x.b_part};
    }
    friend FtsElement operator*(const F& s, const FtsElement& x) {
        return {s * x.alpha, s * x.beta, s * x.a_part, s * x.b_part};
    }
    friend bool operator==(const FtsElement& x, const FtsElement& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.a_part == y.a_part && x.b_part == y.b_part;
    }

    /// Coordinate layout [alpha, beta, A1..A3, B1..B3] used for the canonical
    /// basis and for symplectic inversion.
    std::array<F, kFtsDim> to_array() const {
        return {alpha, beta, a_part[0], a_part[1], a_part[2], b_part[0], b_part[1], b_part[2]};
    }
    static FtsElement from_array(const std::array<F, kFtsDim>& v) {
        FtsElement x;
        x.alpha = v[0];
        x.beta = v[1];
        x.a_part = {v[2], v[3], v[4]};
        x.b_part = {v[5], v[6], v[7]};
        return x;
    }
};

/// Canonical basis element k in the layout above. Pairings:
/// {e_alpha, e_beta} = 1, {e_Ai, e_Bj} = delta_ij, all else zero.
template <class F>
FtsElement<F> fts_basis_element(int k) {
    std::array<F, kFtsDim> v{};
    v[static_cast<std::size_t>(k)] = F(1);
    return FtsElement<F>::from_array(v);
}

/// Antisymmetric bilinear (symplectic) form
/// {x, y} = alpha_x beta_y - beta_x alpha_y + Tr(A_x, B_y) - Tr(B_x, A_y).
template <class F>
F symplectic_form(const FtsElement<F>& x, const FtsElement<F>& y) {
    return x.alpha * y.beta - x.beta * y.alpha + trace_form(x.a_part, y.b_part) -
           trace_form(x.b_part, y.a_part);
}

/// Quartic norm
/// q(x) = -2 [alpha beta - Tr(A,B)]^2 - 8 [alpha N(A) + beta N(B) - Tr(A#, B#)].
template <class F>
F quartic_norm(const FtsElement<F>& x) {
    F pair = x.alpha * x.beta - trace_form(x.a_part, x.b_part);
    F cubes = x.alpha * cubic_norm(x.a_part) + x.beta * cubic_norm(x.b_part) -
              trace_form(sharp(x.a_part), sharp(x.b_part));
    return F(-2) * pair * pair - F(8) * cubes;
}

/// Symmetric 4-linear polarization of q: sum over nonempty subsets S of the
/// four arguments of (-1)^(4-|S|) q(sum S), divided by 24. Satisfies
/// q(x,x,x,x) = q(x).
template <class F>
F quartic_linearized(const FtsElement<F>& x, const FtsElement<F>& y, const FtsElement<F>& w,
                     const FtsElement<F>& z) {
    const FtsElement<F>* arg[4] = {&x, &y, &w, &z};
    F total{};
    for (int mask = 1; mask < 16; ++mask) {
        FtsElement<F> s;
        int bits = 0;
        for (int i = 0; i < 4; ++i) {
            if (mask & (1 << i)) {
                s = s + *arg[i];
                ++bits;
            }
        }
        F term = quartic_norm(s);
        if ((4 - bits) % 2 == 1) term = -term;
        total = total + term;
    }
    return total / F(24);
}

/// Triple product, uniquely defined by {T(x,y,w), z} = q(x,y,w,z). Recovered
/// by symplectic inversion against the canonical basis: with the coordinate
/// layout above, {t, .} = f forces
///   t_alpha = f(e_beta), t_beta = -f(e_alpha),
///   t_Ak = f(e_Bk),      t_Bk = -f(e_Ak).
template <class F>
FtsElement<F> triple_product(const FtsElement<F>& x, const FtsElement<F>& y,
                             const FtsElement<F>& w) {
    std::array<F, kFtsDim> f;
    for (int k = 0; k < kFtsDim; ++k) {
        f[static_cast<std::size_t>(k)] = quartic_linearized(x, y, w, fts_basis_element<F>(k));
    }
    FtsElement<F> t;
    t.alpha = f[1];
    t.beta = -f[0];
    t.a_part = {f[5], f[6], f[7]};
    t.b_part = {-f[2], -f[3], -f[4]};
    return t;
}

/// Rank-1 test covariant: Upsilon(psi, phi) = 3 T(psi, psi, phi) + {psi, phi} psi.
/// Linear in phi; vanishes for every phi iff psi has rank <= 1.
template <class F>
FtsElement<F> upsilon(const FtsElement<F>& psi, const FtsElement<F>& phi) {
    return F(3) * triple_product(psi, psi, phi) + symplectic_form(psi, phi) * psi;
}

}  // namespace ftsent
