#include "ftsent/slocc.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace ftsent {

namespace {

Eigen::MatrixXcd tangent_matrix(const ThreeQubitState<Complex>& s) {
    Eigen::MatrixXcd m(8, 9);
    for (int k = 0; k < 9; ++k) {
        auto img = std_algebra_action(std_algebra_basis<Complex>(k), s);
        for (int i = 0; i < 8; ++i) m(i, k) = img[i];
    }
    return m;
}

template <class Matrix>
RankResult rank_with_gap(const Matrix& m, double sv_eps, double gap_requirement) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    RankResult r;
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    if (smax <= 0.0) {
        // Zero map: rank 0 is unambiguous.
        return {0, std::numeric_limits<double>::infinity(), true};
    }
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > sv_eps * smax) ++rank;
    r.dim = rank;
    if (rank == sv.size() || sv(rank) == 0.0)
        r.gap_ratio = std::numeric_limits<double>::infinity();
    else
        r.gap_ratio = sv(rank - 1) / sv(rank);
    r.determinate = r.gap_ratio >= gap_requirement;
    return r;
}

}  // namespace

RankResult orbit_dimension(const ThreeQubitState<Complex>& s, double sv_eps,
                           double gap_requirement) {
    return rank_with_gap(tangent_matrix(s), sv_eps, gap_requirement);
}

RankResult projective_orbit_dimension(const ThreeQubitState<Complex>& s, double sv_eps,
                                      double gap_requirement) {
    Eigen::MatrixXcd m(8, 10);
    m.leftCols(9) = tangent_matrix(s);
    for (int i = 0; i < 8; ++i) m(i, 9) = s[i];
    RankResult r = rank_with_gap(m, sv_eps, gap_requirement);
    r.dim = std::max(0, r.dim - 1);
    return r;
}

RankResult real_orbit_dimension(const ThreeQubitState<Complex>& s, double sv_eps,
                                double gap_requirement) {
    for (int i = 0; i < 8; ++i)
        if (s[i].imag() != 0.0)
            throw std::invalid_argument("real_orbit_dimension: state has nonzero imaginary amplitudes");
    Eigen::MatrixXd m(8, 9);
    for (int k = 0; k < 9; ++k) {
        auto img = std_algebra_action(std_algebra_basis<Complex>(k), s);
        for (int i = 0; i < 8; ++i) m(i, k) = img[i].real();
    }
    return rank_with_gap(m, sv_eps, gap_requirement);
}

SpanCompareReport action_span_compare(const ThreeQubitState<Complex>& s, double tol) {
    Eigen::MatrixXcd std_m = tangent_matrix(s);
    Eigen::MatrixXcd fts_m(8, 9);
    auto x = to_fts(s);
    for (int k = 0; k < 9; ++k) {
        auto img = from_fts(fts_algebra_action(fts_algebra_basis<Complex>(k), x));
        for (int i = 0; i < 8; ++i) fts_m(i, k) = img[i];
    }

    SpanCompareReport rep;
    auto rank_and_basis = [](const Eigen::MatrixXcd& m, int& rank) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
        const auto& sv = svd.singularValues();
        double smax = sv(0);
        rank = 0;
        if (smax > 0.0)
            for (int i = 0; i < sv.size(); ++i)
                if (sv(i) > 1e-8 * smax) ++rank;
        return Eigen::MatrixXcd(svd.matrixU().leftCols(rank));
    };
    Eigen::MatrixXcd u_std = rank_and_basis(std_m, rep.std_rank);
    Eigen::MatrixXcd u_fts = rank_and_basis(fts_m, rep.fts_rank);

    double worst = 0.0;
    auto project_residuals = [&worst](const Eigen::MatrixXcd& cols, const Eigen::MatrixXcd& onto) {
        for (int k = 0; k < cols.cols(); ++k) {
            Eigen::VectorXcd v = cols.col(k);
            double n = v.norm();
            if (n == 0.0) continue;
            Eigen::VectorXcd resid = v - onto * (onto.adjoint() * v);
            worst = std::max(worst, resid.norm() / n);
        }
    };
    project_residuals(fts_m, u_std);
    project_residuals(std_m, u_fts);
    rep.max_residual = worst;
    rep.ok = rep.std_rank == rep.fts_rank && worst <= tol;
    return rep;
}

std::vector<std::array<Complex, 9>> fts_stabilizer_kernel(const ThreeQubitState<Complex>& s,
                                                          double sv_eps) {
    Eigen::MatrixXcd m(8, 9);
    auto x = to_fts(s);
    for (int k = 0; k < 9; ++k) {
        auto img = from_fts(fts_algebra_action(fts_algebra_basis<Complex>(k), x));
        for (int i = 0; i < 8; ++i) m(i, k) = img[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    if (smax > 0.0)
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > sv_eps * smax) ++rank;
    std::vector<std::array<Complex, 9>> kernel;
    for (int k = rank; k < 9; ++k) {
        std::array<Complex, 9> vec;
        for (int i = 0; i < 9; ++i) vec[static_cast<std::size_t>(i)] = svd.matrixV()(i, k);
        kernel.push_back(vec);
    }
    return kernel;
}

}  // namespace ftsent
