#include "valleysplit/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "valleysplit/error.hpp"

namespace valleysplit {

EigenSolution::EigenSolution(std::vector<double> nodes_nm, std::vector<double> energies_eV,
                             std::vector<std::vector<double>> coefficients)
    : nodes_(std::move(nodes_nm)), energies_(std::move(energies_eV)), coefficients_(std::move(coefficients)) {
    if (energies_.size() != coefficients_.size())
        throw InvalidArgument("one coefficient vector per energy required");
    for (const auto& c : coefficients_)
        if (c.size() != nodes_.size())
            throw InvalidArgument("coefficient vector length must match the node count");
}

double EigenSolution::energy(std::size_t n) const {
    if (n >= energies_.size())
        throw InvalidArgument("subband " + std::to_string(n) + " was not solved");
    return energies_[n];
}

const std::vector<double>& EigenSolution::coefficients(std::size_t n) const {
    if (n >= coefficients_.size())
        throw InvalidArgument("subband " + std::to_string(n) + " was not solved");
    return coefficients_[n];
}

double EigenSolution::psi(std::size_t n, double z_nm) const {
    const auto& c = coefficients(n);
    if (z_nm < nodes_.front() || z_nm > nodes_.back())
        throw InvalidArgument("z = " + std::to_string(z_nm) + " nm outside the solution domain");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), z_nm);
    std::size_t e = static_cast<std::size_t>(std::distance(nodes_.begin(), it));
    e = std::clamp<std::size_t>(e, 1, nodes_.size() - 1) - 1;
    const double t = (z_nm - nodes_[e]) / (nodes_[e + 1] - nodes_[e]);
    if (t == 0.0)
        return c[e];
    if (t == 1.0)
        return c[e + 1];
    return c[e] + t * (c[e + 1] - c[e]);
}

std::size_t count_eigenvalues_below(const SymTridiagonal& H, const SymTridiagonal& M, double lambda) {
    constexpr double pivmin = std::numeric_limits<double>::min() * 1e10;
    const std::size_t n = H.size();
    std::size_t count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = H.diag[i] - lambda * M.diag[i];
        if (i == 0) {
            d = t;
        } else {
            const double e = H.off[i - 1] - lambda * M.off[i - 1];
            d = t - e * (e / d);
        }
        if (std::abs(d) < pivmin)
            d = -pivmin;
        if (d < 0.0)
            ++count;
    }
    return count;
}

namespace {

double bisect_eigenvalue(const SymTridiagonal& H, const SymTridiagonal& M, std::size_t k, double lo, double hi) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 400; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break;
        if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)))
            break;
        if (count_eigenvalues_below(H, M, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return lo + 0.5 * (hi - lo);
}

/// LU of a general tridiagonal matrix with partial pivoting (second superdiagonal fill).
class TridiagonalLU {
public:
    TridiagonalLU(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper)
        : dl_(std::move(lower)), d_(std::move(diag)), du_(std::move(upper)), du2_(d_.size(), 0.0),
          swapped_(d_.size(), false) {
        const std::size_t n = d_.size();
        double scale = 0.0;
        for (double v : d_)
            scale = std::max(scale, std::abs(v));
        for (double v : du_)
            scale = std::max(scale, std::abs(v));
        const double tiny = std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d_[i]) >= std::abs(dl_[i])) {
                if (d_[i] == 0.0)
                    d_[i] = tiny;
                const double f = dl_[i] / d_[i];
                dl_[i] = f;
                d_[i + 1] -= f * du_[i];
            } else {
                const double f = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = f;
                const double tmp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = tmp - f * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -f * du_[i + 1];
                }
                swapped_[i] = true;
            }
        }
        if (n > 0 && d_[n - 1] == 0.0)
            d_[n - 1] = tiny;
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped_[i])
                std::swap(b[i], b[i + 1]);
            b[i + 1] -= dl_[i] * b[i];
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = b[ii];
            if (ii + 1 < n)
                s -= du_[ii] * b[ii + 1];
            if (ii + 2 < n)
                s -= du2_[ii] * b[ii + 2];
            b[ii] = s / d_[ii];
        }
    }

private:
    std::vector<double> dl_, d_, du_, du2_;
    std::vector<bool> swapped_;
};

double m_dot(const SymTridiagonal& M, const std::vector<double>& x, const std::vector<double>& y) {
    const auto My = M.multiply(y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * My[i];
    return s;
}

double inf_norm(const SymTridiagonal& A) {
    double r = 0.0;
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(A.diag[i]);
        if (i > 0)
            row += std::abs(A.off[i - 1]);
        if (i + 1 < n)
            row += std::abs(A.off[i]);
        r = std::max(r, row);
    }
    return r;
}

void check_overlap_positive_definite(const SymTridiagonal& M) {
    double d = 0.0;
    for (std::size_t i = 0; i < M.size(); ++i) {
        d = i == 0 ? M.diag[0] : M.diag[i] - M.off[i - 1] * M.off[i - 1] / d;
        if (!(d > 0.0))
            throw NumericalError("overlap matrix is not positive definite (broken mesh?)");
    }
}

std::vector<double> inverse_iteration(const SymTridiagonal& H, const SymTridiagonal& M, double lambda,
                                      const std::vector<std::vector<double>>& previous,
                                      const std::vector<double>& previous_energies, double cluster_tol) {
    const std::size_t n = H.size();
    std::vector<double> lower(n > 0 ? n - 1 : 0), diag(n), upper(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = H.diag[i] - lambda * M.diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        lower[i] = upper[i] = H.off[i] - lambda * M.off[i];
    const TridiagonalLU lu(std::move(lower), std::move(diag), std::move(upper));

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = 1.0 + 0.5 * std::sin(1.7 * static_cast<double>(i) + 0.3);

    const double scale = inf_norm(H) + std::abs(lambda) * inf_norm(M);
    constexpr int max_iterations = 12;
    for (int it = 1; it <= max_iterations; ++it) {
        auto y = M.multiply(x);
        lu.solve(y);
        x = std::move(y);
        for (std::size_t j = 0; j < previous.size(); ++j) {
            if (std::abs(previous_energies[j] - lambda) > cluster_tol)
                continue;
            const double proj = m_dot(M, previous[j], x);
            for (std::size_t i = 0; i < n; ++i)
                x[i] -= proj * previous[j][i];
        }
        const double norm = std::sqrt(m_dot(M, x, x));
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw NumericalError("inverse iteration produced a degenerate vector");
        for (double& v : x)
            v /= norm;

        const auto Hx = H.multiply(x);
        const auto Mx = M.multiply(x);
        double res = 0.0, xmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            res = std::max(res, std::abs(Hx[i] - lambda * Mx[i]));
            xmax = std::max(xmax, std::abs(x[i]));
        }
        if (it >= 2 && res <= 1e-11 * scale * xmax)
            return x;
    }
    throw NumericalError("inverse iteration did not converge after " + std::to_string(max_iterations) +
                         " iterations at E = " + std::to_string(lambda) + " eV");
}

} // namespace

EigenSolution solve_eigen(const FemMatrices& matrices, std::size_t n_states) {
    const auto& H = matrices.hamiltonian;
    const auto& M = matrices.overlap;
    const std::size_t dim = H.size();
    if (n_states < 1 || n_states >= dim)
        throw InvalidArgument("n_states must be in [1, " + std::to_string(dim) + "), got " + std::to_string(n_states));
    check_overlap_positive_definite(M);

    const double width = matrices.spectrum_max_eV - matrices.spectrum_min_eV;
    const double lo = matrices.spectrum_min_eV - 1e-3 * width - 1e-12;
    const double hi = matrices.spectrum_max_eV + 1e-3 * width + 1e-12;
    if (count_eigenvalues_below(H, M, lo) != 0 || count_eigenvalues_below(H, M, hi) != dim)
        throw NumericalError("generalized eigenvalues escaped the spectral bounds");

    std::vector<double> energies;
    std::vector<std::vector<double>> interior;
    const double cluster_tol = 1e-9 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    for (std::size_t k = 0; k < n_states; ++k) {
        const double e = bisect_eigenvalue(H, M, k, lo, hi);
        interior.push_back(inverse_iteration(H, M, e, interior, energies, cluster_tol));
        energies.push_back(e);
    }

    std::vector<std::vector<double>> full;
    full.reserve(n_states);
    for (auto& c : interior) {
        const auto first = std::find_if(c.begin(), c.end(), [](double v) { return v != 0.0; });
        if (first != c.end() && *first < 0.0)
            for (double& v : c)
                v = -v;
        std::vector<double> f(dim + 2, 0.0);
        std::copy(c.begin(), c.end(), f.begin() + 1);
        full.push_back(std::move(f));
    }
    return {matrices.nodes, std::move(energies), std::move(full)};
}

} // namespace valleysplit
