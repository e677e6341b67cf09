#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "ftsent/invariants.hpp"

namespace ftsent {

enum class EntanglementClass { Null, Separable, BiseparableA_BC, BiseparableB_CA, BiseparableC_AB, W, GHZ };
enum class FtsRank { R0, R1, R2a, R2b, R2c, R3, R4 };

inline const char* to_string(EntanglementClass c) {
    switch (c) {
        case EntanglementClass::Null: return "Null";
        case EntanglementClass::Separable: return "A-B-C";
        case EntanglementClass::BiseparableA_BC: return "A-BC";
        case EntanglementClass::BiseparableB_CA: return "B-CA";
        case EntanglementClass::BiseparableC_AB: return "C-AB";
        case EntanglementClass::W: return "W";
        case EntanglementClass::GHZ: return "GHZ";
    }
    return "?";
}

inline const char* to_string(FtsRank r) {
    switch (r) {
        case FtsRank::R0: return "0";
        case FtsRank::R1: return "1";
        case FtsRank::R2a: return "2a";
        case FtsRank::R2b: return "2b";
        case FtsRank::R2c: return "2c";
        case FtsRank::R3: return "3";
        case FtsRank::R4: return "4";
    }
    return "?";
}

inline std::optional<EntanglementClass> class_from_string(const std::string& s) {
    if (s == "Null") return EntanglementClass::Null;
    if (s == "A-B-C" || s == "Separable") return EntanglementClass::Separable;
    if (s == "A-BC") return EntanglementClass::BiseparableA_BC;
    if (s == "B-CA") return EntanglementClass::BiseparableB_CA;
    if (s == "C-AB") return EntanglementClass::BiseparableC_AB;
    if (s == "W") return EntanglementClass::W;
    if (s == "GHZ") return EntanglementClass::GHZ;
    return std::nullopt;
}

/// Zero-test configuration. Covariants of degree k in the amplitudes are
/// "zero" iff their max-norm is <= epsilon * |psi|^k; the null test uses the
/// absolute floor on |psi|^2 since the norm itself is under test. The exact
/// backend ignores epsilon entirely.
struct ToleranceConfig {
    double epsilon = 1e-9;
    double null_floor = 1e-30;
};

/// Default epsilon, overridable through the FTS_ENTANGLE_EPSILON env var.
inline double default_epsilon() {
    if (const char* env = std::getenv("FTS_ENTANGLE_EPSILON")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {  // fall through to the default
        }
    }
    return 1e-9;
}

struct ClassifierFlags {
    bool marginal = false;                     // some covariant within 10x of its threshold
    bool gamma_ambiguity = false;              // >= 2 gammas above threshold while T tested zero
    bool upsilon_inconsistent = false;         // rank-1 verdict contradicted by the Upsilon basis check
    bool entropy_pattern_inconsistent = false; // Table-left pattern matches no class row

    bool any() const {
        return marginal || gamma_ambiguity || upsilon_inconsistent || entropy_pattern_inconsistent;
    }
    std::vector<std::string> to_strings() const {
        std::vector<std::string> v;
        if (marginal) v.push_back("tolerance-marginal");
        if (gamma_ambiguity) v.push_back("gamma-ambiguity");
        if (upsilon_inconsistent) v.push_back("upsilon-inconsistent");
        if (entropy_pattern_inconsistent) v.push_back("entropy-pattern-inconsistent");
        return v;
    }
};

enum class QSign { Negative, Positive, Zero };
enum class GammaSignature { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

inline const char* to_string(QSign s) {
    switch (s) {
        case QSign::Negative: return "negative";
        case QSign::Positive: return "positive";
        case QSign::Zero: return "zero";
    }
    return "?";
}

inline const char* to_string(GammaSignature s) {
    switch (s) {
        case GammaSignature::PositiveDefinite: return "+";
        case GammaSignature::NegativeDefinite: return "-";
        case GammaSignature::Indefinite: return "indef";
        case GammaSignature::Degenerate: return "degen";
    }
    return "?";
}

/// Real-state refinement of the rank-4 class: sign of q plus the eigenvalue
/// signature of each real symmetric gamma. Each signature is an SL(2,R)^3
/// congruence invariant, so the triple labels the connected component.
struct RealOrbitTag {
    QSign q_sign{};
    std::array<GammaSignature, 3> signatures{};
    std::string orbit_label;
};

template <class F>
struct Classification {
    FtsRank rank{};
    EntanglementClass cls{};
    F q{};
    InvariantReport<F> invariants{};
    ClassifierFlags flags{};
    std::optional<RealOrbitTag> real_tag{};
};

namespace detail {

// Zero-test of a covariant magnitude against a degree-scaled threshold;
// also tracks marginality (magnitude within a factor 10 either side).
struct ZeroTest {
    double threshold;
    bool marginal = false;

    bool is_zero(double magnitude) {
        if (magnitude > threshold / 10.0 && magnitude < threshold * 10.0) marginal = true;
        return magnitude <= threshold;
    }
};

template <class F>
double magnitude(const F& v) {
    using T = scalar_traits<F>;
    return std::sqrt(T::to_double(T::abs_sq(v)));
}

}  // namespace detail

/// Rank-1 witness: true iff Upsilon(psi, e) vanishes for all 8 canonical
/// basis elements e (linearity in phi reduces the universal quantifier to the
/// basis). On false, witness_basis_index maximizes the violation.
template <class F>
struct Rank1Witness {
    bool is_rank_le1;
    int witness_basis_index;  // -1 when is_rank_le1
    double witness_magnitude;
};

template <class F>
Rank1Witness<F> rank1_witness(const ThreeQubitState<F>& s, const ToleranceConfig& tol = {}) {
    using T = scalar_traits<F>;
    auto psi = to_fts(s);
    double scale2 = T::to_double(norm_sq(s));  // |psi|^2; Upsilon is degree 2 in psi, 1 in phi
    int worst = -1;
    double worst_mag = 0.0;
    for (int k = 0; k < kFtsDim; ++k) {
        auto u = upsilon(psi, fts_basis_element<F>(k));
        double mag = 0.0;
        if constexpr (T::is_exact) {
            if (!is_exactly_zero(u)) mag = 1.0;
        } else {
            mag = max_abs(u);
        }
        if (mag > worst_mag) {
            worst_mag = mag;
            worst = k;
        }
    }
    bool zero;
    if constexpr (T::is_exact)
        zero = worst_mag == 0.0;
    else
        zero = worst_mag <= tol.epsilon * scale2;
    return {zero, zero ? -1 : worst, worst_mag};
}

/// FTS rank cascade: null floor, then q (degree 4), then T (degree 3), then
/// the gammas (degree 2), else rank 1 with the Upsilon basis check run as an
/// internal consistency assertion. Each test is reached only after all
/// higher-degree covariants vanished.
template <class F>
Classification<F> classify_fts(const ThreeQubitState<F>& s, const ToleranceConfig& tol = {}) {
    using T = scalar_traits<F>;
    Classification<F> out;
    out.invariants = compute_invariants(s);
    out.q = out.invariants.q;

    double n2 = T::to_double(out.invariants.norm_sq);
    if constexpr (T::is_exact) {
        if (is_exactly_zero(s)) {
            out.rank = FtsRank::R0;
            out.cls = EntanglementClass::Null;
            return out;
        }
    } else {
        if (n2 <= tol.null_floor) {
            out.rank = FtsRank::R0;
            out.cls = EntanglementClass::Null;
            return out;
        }
    }
    double nrm = std::sqrt(n2);

    auto decide = [&](double mag, int degree) {
        if constexpr (T::is_exact) {
            return mag != 0.0;  // mag is 0/1 indicator in exact mode
        } else {
            detail::ZeroTest zt{tol.epsilon * std::pow(nrm, degree)};
            bool nonzero = !zt.is_zero(mag);
            if (zt.marginal) out.flags.marginal = true;
            return nonzero;
        }
    };

    double qmag;
    if constexpr (T::is_exact)
        qmag = (out.q == F{}) ? 0.0 : 1.0;
    else
        qmag = detail::magnitude(out.q);
    if (decide(qmag, 4)) {
        out.rank = FtsRank::R4;
        out.cls = EntanglementClass::GHZ;
        return out;
    }

    auto t = t_cubic_fast(s);
    double tmag;
    if constexpr (T::is_exact)
        tmag = is_exactly_zero(t) ? 0.0 : 1.0;
    else
        tmag = max_abs(t);
    if (decide(tmag, 3)) {
        out.rank = FtsRank::R3;
        out.cls = EntanglementClass::W;
        return out;
    }

    auto g = gamma_matrices(s);
    bool above[3];
    double mags[3];
    for (int i = 0; i < 3; ++i) {
        if constexpr (T::is_exact) {
            bool nz = false;
            for (const auto& v : g[i].m)
                if (!(v == F{})) nz = true;
            mags[i] = nz ? 1.0 : 0.0;
        } else {
            mags[i] = max_abs(g[i]);
        }
        above[i] = decide(mags[i], 2);
    }
    int count = (above[0] ? 1 : 0) + (above[1] ? 1 : 0) + (above[2] ? 1 : 0);
    if (count >= 1) {
        // T = 0 excludes two simultaneous nonzero gammas; if thresholds
        // disagree the state is numerically marginal.
        if (count > 1) out.flags.gamma_ambiguity = true;
        int pick = 0;
        for (int i = 1; i < 3; ++i)
            if (mags[i] > mags[pick]) pick = i;
        out.rank = pick == 0 ? FtsRank::R2a : (pick == 1 ? FtsRank::R2b : FtsRank::R2c);
        out.cls = pick == 0 ? EntanglementClass::BiseparableA_BC
                            : (pick == 1 ? EntanglementClass::BiseparableB_CA
                                         : EntanglementClass::BiseparableC_AB);
        return out;
    }

    out.rank = FtsRank::R1;
    out.cls = EntanglementClass::Separable;
    auto w = rank1_witness(s, tol);
    if (!w.is_rank_le1) out.flags.upsilon_inconsistent = true;
    return out;
}

/// Conventional truth-table classification from the vanishing pattern of
/// (|psi|, S_A, S_B, S_C, Det a). Patterns matching no row (possible only
/// through threshold artifacts) are flagged and resolved deterministically.
template <class F>
EntanglementClass classify_conventional(const ThreeQubitState<F>& s, const ToleranceConfig& tol = {},
                                        ClassifierFlags* flags = nullptr) {
    using T = scalar_traits<F>;
    ClassifierFlags local;
    ClassifierFlags& fl = flags ? *flags : local;

    auto n2r = norm_sq(s);
    double n2 = T::to_double(n2r);
    if constexpr (T::is_exact) {
        if (is_exactly_zero(s)) return EntanglementClass::Null;
    } else {
        if (n2 <= tol.null_floor) return EntanglementClass::Null;
    }

    auto S = local_entropies(s);
    F det = hyperdet(s);
    bool sa, sb, sc, d;
    if constexpr (T::is_exact) {
        sa = !(S[0] == typename T::real_type(0));
        sb = !(S[1] == typename T::real_type(0));
        sc = !(S[2] == typename T::real_type(0));
        d = !(det == F{});
    } else {
        // S and Det a are degree 4 in the amplitudes.
        detail::ZeroTest zt{tol.epsilon * n2 * n2};
        sa = !zt.is_zero(T::to_double(S[0]));
        sb = !zt.is_zero(T::to_double(S[1]));
        sc = !zt.is_zero(T::to_double(S[2]));
        d = !zt.is_zero(detail::magnitude(det));
        if (zt.marginal) fl.marginal = true;
    }

    int scount = (sa ? 1 : 0) + (sb ? 1 : 0) + (sc ? 1 : 0);
    if (d) {
        if (scount != 3) fl.entropy_pattern_inconsistent = true;
        return EntanglementClass::GHZ;
    }
    switch (scount) {
        case 3: return EntanglementClass::W;
        case 2:
            if (!sa) return EntanglementClass::BiseparableA_BC;
            if (!sb) return EntanglementClass::BiseparableB_CA;
            return EntanglementClass::BiseparableC_AB;
        case 1:
            fl.entropy_pattern_inconsistent = true;
            return EntanglementClass::Separable;
        default: return EntanglementClass::Separable;
    }
}

/// Real-amplitude classification with the rank-4 orbit refinement. Rejects
/// states with any nonzero imaginary part.
template <class F>
Classification<F> classify_real(const ThreeQubitState<F>& s, const ToleranceConfig& tol = {}) {
    using T = scalar_traits<F>;
    for (int i = 0; i < 8; ++i)
        if (!(T::imag(s[i]) == typename T::real_type(0)))
            throw std::invalid_argument("classify_real: state has nonzero imaginary amplitudes");

    Classification<F> out = classify_fts(s, tol);
    if (out.rank != FtsRank::R4) return out;

    RealOrbitTag tag;
    tag.q_sign = T::real(out.q) < typename T::real_type(0) ? QSign::Negative : QSign::Positive;

    // det gamma^X = q/2, so at rank 4 each real symmetric gamma is definite
    // (q > 0) or indefinite (q < 0); classify by determinant and trace signs.
    auto g = gamma_matrices(s);
    double n2 = T::to_double(norm_sq(s));
    double thr = tol.epsilon * n2 * n2;  // det gamma is degree 4
    for (int i = 0; i < 3; ++i) {
        double dg = T::to_double(T::real(det2(g[i])));
        double tr = T::to_double(T::real(trace_of(g[i])));
        GammaSignature sig;
        if constexpr (T::is_exact) {
            if (dg > 0)
                sig = tr > 0 ? GammaSignature::PositiveDefinite : GammaSignature::NegativeDefinite;
            else if (dg < 0)
                sig = GammaSignature::Indefinite;
            else
                sig = GammaSignature::Degenerate;
        } else {
            if (dg > thr)
                sig = tr > 0 ? GammaSignature::PositiveDefinite : GammaSignature::NegativeDefinite;
            else if (dg < -thr)
                sig = GammaSignature::Indefinite;
            else
                sig = GammaSignature::Degenerate;
        }
        tag.signatures[static_cast<std::size_t>(i)] = sig;
    }

    if (tag.q_sign == QSign::Negative) {
        tag.orbit_label = "SO(1,1)^2";
    } else {
        std::string sig;
        for (int i = 0; i < 3; ++i) {
            sig += to_string(tag.signatures[static_cast<std::size_t>(i)]);
            if (i < 2) sig += ",";
        }
        tag.orbit_label = "U(1)^2 sig=(" + sig + ")";
    }
    out.real_tag = tag;
    return out;
}

/// Class stratification under non-invertible transformations, as a
/// transitively reduced edge list, one "src -> dst" line per edge. GHZ and W
/// are incomparable; both descend to every biseparable class.
inline std::string hierarchy_export() {
    return "GHZ -> A-BC\n"
           "GHZ -> B-CA\n"
           "GHZ -> C-AB\n"
           "W -> A-BC\n"
           "W -> B-CA\n"
           "W -> C-AB\n"
           "A-BC -> A-B-C\n"
           "B-CA -> A-B-C\n"
           "C-AB -> A-B-C\n"
           "A-B-C -> Null\n";
}

/// Table of the seven class representatives (unnormalized).
template <class F>
ThreeQubitState<F> class_representative(EntanglementClass c) {
    ThreeQubitState<F> s;
    switch (c) {
        case EntanglementClass::Null: break;
        case EntanglementClass::Separable: s[0] = F(1); break;                      // |000>
        case EntanglementClass::BiseparableA_BC: s[2] = F(1); s[1] = F(1); break;   // |010>+|001>
        case EntanglementClass::BiseparableB_CA: s[4] = F(1); s[1] = F(1); break;   // |100>+|001>
        case EntanglementClass::BiseparableC_AB: s[2] = F(1); s[4] = F(1); break;   // |010>+|100>
        case EntanglementClass::W: s[4] = F(1); s[2] = F(1); s[1] = F(1); break;    // |100>+|010>+|001>
        case EntanglementClass::GHZ: s[0] = F(1); s[7] = F(1); break;               // |000>+|111>
    }
    return s;
}

}  // namespace ftsent
