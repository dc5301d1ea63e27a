#include "mplex/detail/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mplex/error.hpp"

namespace mplex::detail {

SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> a, int max_sweeps) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> v(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a[static_cast<size_t>(p)][static_cast<size_t>(q)] *
                                                 a[static_cast<size_t>(p)][static_cast<size_t>(q)];
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) scale = std::max(scale, std::abs(a[static_cast<size_t>(p)][static_cast<size_t>(q)]));
    const double stop = std::max(scale, 1.0) * 1e-14 * n;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_norm() <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<size_t>(p)][static_cast<size_t>(q)];
                if (std::abs(apq) <= stop / std::max(1, n * n)) continue;
                double app = a[static_cast<size_t>(p)][static_cast<size_t>(p)];
                double aqq = a[static_cast<size_t>(q)][static_cast<size_t>(q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                a[static_cast<size_t>(p)][static_cast<size_t>(p)] = app - t * apq;
                a[static_cast<size_t>(q)][static_cast<size_t>(q)] = aqq + t * apq;
                a[static_cast<size_t>(p)][static_cast<size_t>(q)] = 0.0;
                a[static_cast<size_t>(q)][static_cast<size_t>(p)] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a[static_cast<size_t>(i)][static_cast<size_t>(p)];
                    double aiq = a[static_cast<size_t>(i)][static_cast<size_t>(q)];
                    a[static_cast<size_t>(i)][static_cast<size_t>(p)] = aip - s * (aiq + tau * aip);
                    a[static_cast<size_t>(p)][static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(p)];
                    a[static_cast<size_t>(i)][static_cast<size_t>(q)] = aiq + s * (aip - tau * aiq);
                    a[static_cast<size_t>(q)][static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(q)];
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v[static_cast<size_t>(i)][static_cast<size_t>(p)];
                    double viq = v[static_cast<size_t>(i)][static_cast<size_t>(q)];
                    v[static_cast<size_t>(i)][static_cast<size_t>(p)] = vip - s * (viq + tau * vip);
                    v[static_cast<size_t>(i)][static_cast<size_t>(q)] = viq + s * (vip - tau * viq);
                }
            }
        }
    }
    if (off_norm() > stop * 10.0)
        fail(errc::no_convergence, "jacobi sweeps exhausted before off-diagonal norm vanished");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x)][static_cast<size_t>(x)] < a[static_cast<size_t>(y)][static_cast<size_t>(y)];
    });

    SymmetricEigen out;
    out.values.reserve(static_cast<size_t>(n));
    out.vectors.reserve(static_cast<size_t>(n));
    for (int k : order) {
        out.values.push_back(a[static_cast<size_t>(k)][static_cast<size_t>(k)]);
        std::vector<double> col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = v[static_cast<size_t>(i)][static_cast<size_t>(k)];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

} // namespace mplex::detail
