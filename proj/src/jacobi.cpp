#include "gspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gspec {

namespace {

std::string convergence_message(const std::string& matrix_id, double off_norm, std::size_t sweeps) {
    std::ostringstream os;
    os << "Jacobi eigensolver did not converge for " << matrix_id << " after " << sweeps
       << " sweeps (off-diagonal norm " << off_norm << ")";
    return os.str();
}

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j) sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p, q) with the rotation J = [c s; -s c] applied as J^T A J.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
    const double apq = a(p, q);
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

ConvergenceError::ConvergenceError(const std::string& matrix_id, double off_norm, std::size_t sweeps)
    : std::runtime_error(convergence_message(matrix_id, off_norm, sweeps)), off_norm_(off_norm) {}

EigenPairs eig_sym(const Eigen::MatrixXd& m, const JacobiOptions& options, const std::string& matrix_id) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_sym: matrix must be square");
    const Eigen::Index n = m.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (m(i, j) != m(j, i)) throw std::invalid_argument("eig_sym: " + matrix_id + " is not symmetric");
        }
    }

    Eigen::MatrixXd a = m;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double threshold = options.relative_tolerance * m.norm();

    std::size_t sweeps = 0;
    double off = off_diagonal_norm(a);
    while (off > threshold) {
        if (sweeps == options.max_sweeps) throw ConvergenceError(matrix_id, off, sweeps);
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) != 0.0) rotate(a, v, p, q);
            }
        }
        ++sweeps;
        off = off_diagonal_norm(a);
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

    EigenPairs out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    out.sweeps = sweeps;
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.values(k) = a(src, src);
        out.vectors.col(k) = v.col(src);
    }
    return out;
}

}  // namespace gspec
