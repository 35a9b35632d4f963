// Copyright 2026 The tripleunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tripleunc/product_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tripleunc/error.hpp"

namespace tripleunc {

std::vector<Complex> amplitudes_from_angles(std::span<const double> angles, std::size_t dim) {
    if (dim == 0 || angles.size() != angle_count(dim)) {
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(angle_count(dim)) +
                                                    " angles for dimension " + std::to_string(dim));
    }
    std::vector<Complex> out(dim);
    double tail = 1.0;  // product of sines so far
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        const double r = tail * std::cos(angles[k]);
        out[k] = k == 0 ? Complex(r) : std::polar(r, angles[dim - 1 + k - 1]);
        tail *= std::sin(angles[k]);
    }
    out[dim - 1] = dim == 1 ? Complex(tail) : std::polar(tail, angles[2 * dim - 3]);
    return out;
}

std::vector<double> angles_from_amplitudes(std::span<const Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    std::vector<double> out(angle_count(dim));
    if (dim <= 1) return out;
    double rest = 0.0;
    for (const auto &z : amplitudes) rest += std::norm(z);
    const double ref_phase = std::abs(amplitudes[0]) > 0.0 ? std::arg(amplitudes[0]) : 0.0;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        const double r = std::abs(amplitudes[k]);
        rest -= r * r;
        out[k] = std::atan2(std::sqrt(std::max(rest, 0.0)), r);
    }
    for (std::size_t k = 1; k < dim; ++k) out[dim - 2 + k] = std::arg(amplitudes[k]) - ref_phase;
    return out;
}

ProductVarianceModel::ProductVarianceModel(const ObservableTriple &t)
    : dim_(t.dim()),
      h_{t[0].matrix(), t[1].matrix(), t[2].matrix()},
      h_sq_{h_[0] * h_[0], h_[1] * h_[1], h_[2] * h_[2]},
      ic_{t.hermitian_commutator_at(0).matrix(), t.hermitian_commutator_at(1).matrix(),
          t.hermitian_commutator_at(2).matrix()} {}

namespace {

double quadratic_form(const ComplexMatrix &m, std::span<const Complex> v) {
    const std::size_t n = m.dim();
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += m(i, j) * v[j];
        acc += std::conj(v[i]) * row;
    }
    return acc.real();
}

std::array<double, 3> bloch_from_angles(double theta, double phi) {
    // (cos t, sin t e^{i phi}) has Bloch vector (sin 2t cos phi, sin 2t sin phi, cos 2t)
    const double s = std::sin(2.0 * theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(2.0 * theta)};
}

}  // namespace

double ProductVarianceModel::variance(std::span<const Complex> mu,
                                      const std::array<double, 3> &b) const {
    double second = 0.0;
    double first = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        second += quadratic_form(h_sq_[j], mu) + quadratic_form(ic_[j], mu) * b[cyclic(j, 2)];
        first += quadratic_form(h_[j], mu) * b[j];
    }
    return second - first * first;
}

double ProductVarianceModel::variance_at(std::span<const double> params) const {
    const std::size_t na = angle_count(dim_);
    const auto mu = amplitudes_from_angles(params.subspan(0, na), dim_);
    return variance(mu, bloch_from_angles(params[na], params[na + 1]));
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> fd_gradient(const std::function<double(std::span<const double>)> &f,
                                std::vector<double> x, double h) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        x[i] = xi + h;
        const double fp = f(x);
        x[i] = xi - h;
        const double fm = f(x);
        x[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

}  // namespace

LocalSearchResult minimize_bfgs(const std::function<double(std::span<const double>)> &f,
                                std::vector<double> x0, const LocalSearchOptions &opts) {
    const std::size_t n = x0.size();
    std::vector<double> x = std::move(x0);
    double fx = f(x);
    LocalSearchResult result{x, fx, 0, n == 0};
    if (n == 0) return result;

    // Inverse Hessian approximation, row-major.
    std::vector<double> hinv(n * n, 0.0);
    auto reset_hessian = [&] {
        std::fill(hinv.begin(), hinv.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) hinv[i * n + i] = 1.0;
    };
    reset_hessian();

    std::vector<double> g = fd_gradient(f, x, opts.fd_step);
    int quiet = 0;
    int it = 0;
    bool steepest = true;
    for (; it < opts.max_iterations; ++it) {
        std::vector<double> p(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) p[i] -= hinv[i * n + j] * g[j];
        }
        double slope = dot(p, g);
        if (!(slope < 0.0)) {
            reset_hessian();
            steepest = true;
            for (std::size_t i = 0; i < n; ++i) p[i] = -g[i];
            slope = dot(p, g);
        }
        if (std::sqrt(dot(g, g)) < 1e-12 || slope == 0.0) {
            result.converged = true;
            break;
        }

        double step = 1.0;
        std::vector<double> x_new(n);
        double f_new = fx;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + step * p[i];
            f_new = f(x_new);
            if (f_new <= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // Even steepest descent cannot decrease f: a minimum to round-off.
            if (steepest) {
                result.converged = true;
                break;
            }
            reset_hessian();
            steepest = true;
            continue;
        }
        steepest = false;

        std::vector<double> g_new = fd_gradient(f, x_new, opts.fd_step);
        std::vector<double> s(n);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - x[i];
            y[i] = g_new[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-18) {
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            const double rho = 1.0 / sy;
            std::vector<double> hy(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) hy[i] += hinv[i * n + j] * y[j];
            }
            const double yhy = dot(y, hy);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    hinv[i * n + j] += (1.0 + rho * yhy) * rho * s[i] * s[j] -
                                       rho * (hy[i] * s[j] + s[i] * hy[j]);
                }
            }
        }

        const double change = fx - f_new;
        x = std::move(x_new);
        fx = f_new;
        g = std::move(g_new);
        quiet = change <= opts.tolerance * (1.0 + std::abs(fx)) ? quiet + 1 : 0;
        if (quiet >= 3) {
            result.converged = true;
            ++it;
            break;
        }
    }
    result.x = std::move(x);
    result.value = fx;
    result.iterations = it;
    return result;
}

namespace {

struct QubitMoments {
    // H = h0 I + sum_k hk s_k
    double h0;
    std::array<double, 3> h;
};

QubitMoments pauli_coefficients(const ComplexMatrix &m) {
    return {0.5 * (m(0, 0) + m(1, 1)).real(),
            {m(1, 0).real(), m(1, 0).imag(), 0.5 * (m(0, 0) - m(1, 1)).real()}};
}

double moment(const QubitMoments &q, const std::array<double, 3> &a) {
    return q.h0 + q.h[0] * a[0] + q.h[1] * a[1] + q.h[2] * a[2];
}

QuantumState qubit_from_angles(double theta, double phi) {
    return QuantumState::pure_normalized({Complex(std::cos(theta)), std::polar(std::sin(theta), phi)});
}

}  // namespace

GridMinimum bloch_grid_minimum(const ObservableTriple &t, double step) {
    if (t.dim() != 2) {
        throw Error(ErrorCode::InvalidArgument, "Bloch grid oracle needs a qubit triple");
    }
    if (!(step > 0.0) || step > std::numbers::pi / 4) {
        throw Error(ErrorCode::ConfigInvalid, "grid step must lie in (0, pi/4]");
    }
    std::array<QubitMoments, 3> h{};
    std::array<QubitMoments, 3> h_sq{};
    std::array<QubitMoments, 3> ic{};
    for (std::size_t j = 0; j < 3; ++j) {
        h[j] = pauli_coefficients(t[j].matrix());
        h_sq[j] = pauli_coefficients(t[j].matrix() * t[j].matrix());
        ic[j] = pauli_coefficients(t.hermitian_commutator_at(j).matrix());
    }
    // Angles here are the half-angles theta in (cos theta, sin theta e^{i phi}).
    auto objective = [&](const std::array<double, 4> &x) {
        const auto a = bloch_from_angles(x[0], x[1]);
        const auto b = bloch_from_angles(x[2], x[3]);
        double second = 0.0;
        double first = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            second += moment(h_sq[j], a) + moment(ic[j], a) * b[cyclic(j, 2)];
            first += moment(h[j], a) * b[j];
        }
        return second - first * first;
    };

    // Bloch polar angle in [0, pi], azimuth in [0, 2 pi).
    const auto n_polar = static_cast<std::size_t>(std::ceil(std::numbers::pi / step)) + 1;
    const auto n_azim = static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi / step));
    const double d_polar = std::numbers::pi / static_cast<double>(n_polar - 1);
    const double d_azim = 2.0 * std::numbers::pi / static_cast<double>(n_azim);
    std::vector<std::array<double, 2>> points;
    std::vector<std::array<double, 3>> bloch;
    for (std::size_t i = 0; i < n_polar; ++i) {
        const std::size_t n_here = (i == 0 || i + 1 == n_polar) ? 1 : n_azim;
        for (std::size_t k = 0; k < n_here; ++k) {
            const double theta = 0.5 * d_polar * static_cast<double>(i);
            const double phi = d_azim * static_cast<double>(k);
            points.push_back({theta, phi});
            bloch.push_back(bloch_from_angles(theta, phi));
        }
    }

    struct Cell {
        double value;
        std::size_t mu;
        std::size_t nu;
    };
    constexpr std::size_t kSeeds = 8;
    std::vector<Cell> best;
    for (std::size_t m = 0; m < points.size(); ++m) {
        const auto &a = bloch[m];
        double s = 0.0;
        std::array<double, 3> c{};
        std::array<double, 3> hm{};
        for (std::size_t j = 0; j < 3; ++j) {
            s += moment(h_sq[j], a);
            c[cyclic(j, 2)] = moment(ic[j], a);
            hm[j] = moment(h[j], a);
        }
        double local = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t n = 0; n < points.size(); ++n) {
            const auto &b = bloch[n];
            const double first = hm[0] * b[0] + hm[1] * b[1] + hm[2] * b[2];
            const double v = s + c[0] * b[0] + c[1] * b[1] + c[2] * b[2] - first * first;
            if (v < local) {
                local = v;
                arg = n;
            }
        }
        best.push_back({local, m, arg});
    }
    std::partial_sort(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(std::min(kSeeds, best.size())),
                      best.end(), [](const Cell &x, const Cell &y) {
                          return x.value < y.value || (x.value == y.value && x.mu < y.mu);
                      });
    best.resize(std::min(kSeeds, best.size()));

    double best_value = std::numeric_limits<double>::infinity();
    std::array<double, 4> best_x{};
    for (const auto &cell : best) {
        std::array<double, 4> x{points[cell.mu][0], points[cell.mu][1], points[cell.nu][0],
                                points[cell.nu][1]};
        double fx = objective(x);
        double h_step = step;
        while (h_step > 1e-10) {
            bool improved = false;
            for (std::size_t i = 0; i < 4; ++i) {
                for (double dir : {-1.0, 1.0}) {
                    auto trial = x;
                    trial[i] += dir * h_step;
                    const double ft = objective(trial);
                    if (ft < fx) {
                        fx = ft;
                        x = trial;
                        improved = true;
                    }
                }
            }
            if (!improved) h_step *= 0.5;
        }
        if (fx < best_value) {
            best_value = fx;
            best_x = x;
        }
    }
    return {best_value, qubit_from_angles(best_x[0], best_x[1]), qubit_from_angles(best_x[2], best_x[3])};
}

}  // namespace tripleunc
