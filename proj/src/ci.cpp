#include "jastrow1d/ci.hpp"

#include "jastrow1d/errors.hpp"
#include "jastrow1d/oscillator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace jastrow1d {

std::string_view to_string(Truncation t) { return t == Truncation::orbitals ? "orbitals" : "total_quanta"; }

Truncation parse_truncation(std::string_view name) {
    if (name == "orbitals") {
        return Truncation::orbitals;
    }
    if (name == "total_quanta") {
        return Truncation::total_quanta;
    }
    throw InvalidArgument("unknown truncation '" + std::string(name) + "' (expected orbitals or total_quanta)");
}

std::optional<std::size_t> FockBasis::index_of(const std::vector<int> &state) const {
    const auto it = std::lower_bound(states.begin(), states.end(), state);
    if (it == states.end() || *it != state) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - states.begin());
}

namespace {

void enumerate(FockBasis &basis, std::vector<int> &current, int next_min, int quanta, int max_quanta) {
    if (static_cast<int>(current.size()) == basis.particles) {
        basis.states.push_back(current);
        return;
    }
    const int remaining = basis.particles - static_cast<int>(current.size());
    for (int k = next_min; k < basis.orbitals; ++k) {
        // Cheapest completion: the remaining particles in orbitals k, k(+1), ...
        const int step = basis.statistics == Statistics::fermions ? 1 : 0;
        const int cheapest = remaining * k + step * remaining * (remaining - 1) / 2;
        if (quanta + cheapest > max_quanta) {
            break;
        }
        current.push_back(k);
        enumerate(basis, current, k + step, quanta + k, max_quanta);
        current.pop_back();
    }
}

} // namespace

FockBasis build_fock_basis(int particles, int orbitals, Statistics statistics, Truncation truncation) {
    if (particles < 1 || particles > kMaxCiParticles) {
        throw InvalidArgument("CI particle count must be in [1, 4], got " + std::to_string(particles));
    }
    if (orbitals < particles || orbitals > kMaxCiOrbitals) {
        throw InvalidArgument("CI needs N <= M <= 20 orbitals, got N = " + std::to_string(particles) +
                              ", M = " + std::to_string(orbitals));
    }
    FockBasis basis;
    basis.particles = particles;
    basis.orbitals = orbitals;
    basis.statistics = statistics;
    basis.truncation = truncation;
    const int max_quanta = truncation == Truncation::total_quanta ? orbitals - 1 : particles * orbitals;
    std::vector<int> current;
    enumerate(basis, current, 0, 0, max_quanta);
    if (basis.states.empty()) {
        throw InvalidArgument("truncated Fock basis is empty; increase the number of orbitals");
    }
    return basis;
}

PairTransformation::PairTransformation(int max_total) : max_total_(max_total) {
    if (max_total < 0 || max_total + 2 > kMaxHermiteOrder) {
        throw InvalidArgument("pair transformation order out of range");
    }
    coeff_.resize(max_total + 1);
    for (int a = 0; a <= max_total; ++a) {
        coeff_[a].resize(max_total + 1 - a);
    }
    constexpr double s = 0.70710678118654752440;
    for (int total = 0; total <= max_total; ++total) {
        // Integrand is a polynomial of degree 2 * total per coordinate times exp(-R^2 - r^2).
        const QuadratureRule gh = gauss_hermite_rule(total + 2);
        const std::size_t q = gh.nodes.size();
        const std::size_t width = static_cast<std::size_t>(total) + 1;
        // Gaussian-free orbitals: chi_k(z) exp(z^2/2); x^2 + y^2 = R^2 + r^2 so the Gaussians cancel.
        auto poly = [&](double z, std::vector<double> &out) {
            out[0] = std::pow(std::numbers::pi, -0.25);
            if (out.size() > 1) {
                out[1] = std::numbers::sqrt2 * z * out[0];
            }
            for (std::size_t k = 1; k + 1 < out.size(); ++k) {
                const double kk = static_cast<double>(k);
                out[k + 1] = z * std::sqrt(2.0 / (kk + 1.0)) * out[k] - std::sqrt(kk / (kk + 1.0)) * out[k - 1];
            }
        };
        std::vector<double> pr(width);
        std::vector<double> pq(width);
        std::vector<double> px(width);
        std::vector<double> py(width);
        std::vector<double> acc(width * width, 0.0); // [a][n]
        for (std::size_t i = 0; i < q; ++i) {
            poly(gh.nodes[i], pr);
            for (std::size_t j = 0; j < q; ++j) {
                poly(gh.nodes[j], pq);
                poly((gh.nodes[i] + gh.nodes[j]) * s, px);
                poly((gh.nodes[i] - gh.nodes[j]) * s, py);
                const double w = gh.weights[i] * gh.weights[j];
                for (int a = 0; a <= total; ++a) {
                    const double left = w * px[a] * py[total - a];
                    for (int n = 0; n <= total; ++n) {
                        acc[a * width + n] += left * pr[total - n] * pq[n];
                    }
                }
            }
        }
        for (int a = 0; a <= total; ++a) {
            auto &row = coeff_[a][total - a];
            row.resize(width);
            for (int n = 0; n <= total; ++n) {
                row[n] = acc[a * width + n];
            }
        }
    }
}

double PairTransformation::operator()(int a, int b, int n) const {
    if (a < 0 || b < 0 || a + b > max_total_ || n < 0 || n > a + b) {
        return 0.0;
    }
    return coeff_[a][b][n];
}

namespace {

// Orbit of (a,b,c,d) under exchange of the two coordinates and under the
// bra-ket swaps a<->c, b<->d.
std::array<std::array<int, 4>, 8> orbit(int a, int b, int c, int d) {
    return {{{a, b, c, d},
             {b, a, d, c},
             {c, b, a, d},
             {a, d, c, b},
             {c, d, a, b},
             {d, c, b, a},
             {b, c, d, a},
             {d, a, b, c}}};
}

template <class Entry> TwoBodyTensor fill_by_orbit(int size, Entry &&entry) {
    TwoBodyTensor t(size);
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            for (int c = 0; c < size; ++c) {
                for (int d = 0; d < size; ++d) {
                    if ((a + b + c + d) % 2 != 0) {
                        continue;
                    }
                    const auto members = orbit(a, b, c, d);
                    const auto canonical = *std::min_element(members.begin(), members.end());
                    if (canonical != std::array<int, 4>{a, b, c, d}) {
                        continue;
                    }
                    const double v = entry(a, b, c, d);
                    for (const auto &m : members) {
                        t(m[0], m[1], m[2], m[3]) = v;
                    }
                }
            }
        }
    }
    return t;
}

} // namespace

TwoBodyTensor two_body_tensor_relative(const Interaction &inter, int size) {
    if (size < 1 || size > kMaxCiOrbitals) {
        throw InvalidArgument("tensor size must be in [1, 20]");
    }
    if (inter.kind == InteractionKind::none) {
        return TwoBodyTensor(size);
    }
    const int max_total = 2 * (size - 1);
    const PairTransformation pair(max_total);
    const Matrix rel = potential_matrix(inter, max_total + 1, std::numbers::sqrt2);
    return fill_by_orbit(size, [&](int a, int b, int c, int d) {
        const int left = a + b;
        const int right = c + d;
        double s = 0.0;
        for (int n = 0; n <= left; ++n) {
            // The centre-of-mass quantum number left - n must match on both sides.
            const int m = n + right - left;
            if (m < 0 || m > right) {
                continue;
            }
            s += pair(a, b, n) * pair(c, d, m) * rel(n, m);
        }
        return s;
    });
}

TwoBodyTensor two_body_tensor(const Interaction &inter, int size) {
    if (size < 1 || size > kMaxCiOrbitals) {
        throw InvalidArgument("tensor size must be in [1, 20]");
    }
    if (inter.kind != InteractionKind::contact) {
        return two_body_tensor_relative(inter, size);
    }
    // g \int chi_a chi_b chi_c chi_d dx = g/sqrt(2) \int e^{-t^2} p_a p_b p_c p_d (t/sqrt(2)) dt
    const QuadratureRule gh = gauss_hermite_rule(2 * size + 2);
    Matrix p(gh.nodes.size(), static_cast<std::size_t>(size));
    std::vector<double> chi(size);
    for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
        const double x = gh.nodes[i] / std::numbers::sqrt2;
        ho_orbitals(x, chi);
        const double undo = std::exp(0.5 * x * x);
        for (int k = 0; k < size; ++k) {
            p(i, k) = chi[k] * undo;
        }
    }
    const double scale = inter.strength / std::numbers::sqrt2;
    return fill_by_orbit(size, [&](int a, int b, int c, int d) {
        double s = 0.0;
        for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
            s += gh.weights[i] * p(i, a) * p(i, b) * p(i, c) * p(i, d);
        }
        return scale * s;
    });
}

namespace {

struct Occupation {
    std::array<int, kMaxCiOrbitals> n{};

    std::vector<int> to_state(int particles) const {
        std::vector<int> s;
        s.reserve(particles);
        for (int k = 0; k < kMaxCiOrbitals; ++k) {
            for (int r = 0; r < n[k]; ++r) {
                s.push_back(k);
            }
        }
        return s;
    }
    int below(int k) const {
        int c = 0;
        for (int i = 0; i < k; ++i) {
            c += n[i];
        }
        return c;
    }
};

// Returns the amplitude (0 if the operator kills the state).
double annihilate(Occupation &occ, int k, Statistics stats) {
    if (occ.n[k] == 0) {
        return 0.0;
    }
    double amp = 0.0;
    if (stats == Statistics::bosons) {
        amp = std::sqrt(static_cast<double>(occ.n[k]));
    } else {
        amp = occ.below(k) % 2 == 0 ? 1.0 : -1.0;
    }
    --occ.n[k];
    return amp;
}

double create(Occupation &occ, int k, Statistics stats) {
    double amp = 0.0;
    if (stats == Statistics::bosons) {
        amp = std::sqrt(static_cast<double>(occ.n[k] + 1));
    } else {
        if (occ.n[k] != 0) {
            return 0.0;
        }
        amp = occ.below(k) % 2 == 0 ? 1.0 : -1.0;
    }
    ++occ.n[k];
    return amp;
}

} // namespace

Matrix build_hamiltonian(const FockBasis &basis, const TwoBodyTensor &tensor) {
    if (tensor.size() != basis.orbitals) {
        throw InvalidArgument("tensor size does not match the number of orbitals");
    }
    const std::size_t dim = basis.dimension();
    const int m = basis.orbitals;
    const Statistics stats = basis.statistics;
    Matrix h = Matrix::square(dim);
    const long long ndim = static_cast<long long>(dim);

    // Column i collects <j| H |i>; each iteration writes only its own column.
#pragma omp parallel for schedule(dynamic, 8)
    for (long long ii = 0; ii < ndim; ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const auto &state = basis.states[i];
        Occupation occ;
        double one_body = 0.0;
        for (int k : state) {
            ++occ.n[k];
            one_body += k + 0.5;
        }
        h(i, i) += one_body;

        // 1/2 sum V_abcd a+_a a+_b a_d a_c, applied right to left.
        for (int c = 0; c < m; ++c) {
            Occupation o1 = occ;
            const double amp_c = annihilate(o1, c, stats);
            if (amp_c == 0.0) {
                continue;
            }
            for (int d = 0; d < m; ++d) {
                Occupation o2 = o1;
                const double amp_d = annihilate(o2, d, stats);
                if (amp_d == 0.0) {
                    continue;
                }
                for (int b = 0; b < m; ++b) {
                    Occupation o3 = o2;
                    const double amp_b = create(o3, b, stats);
                    if (amp_b == 0.0) {
                        continue;
                    }
                    for (int a = 0; a < m; ++a) {
                        const double v = tensor(a, b, c, d);
                        if (v == 0.0) {
                            continue;
                        }
                        Occupation o4 = o3;
                        const double amp_a = create(o4, a, stats);
                        if (amp_a == 0.0) {
                            continue;
                        }
                        const auto j = basis.index_of(o4.to_state(basis.particles));
                        if (!j) {
                            continue;
                        }
                        h(*j, i) += 0.5 * v * amp_a * amp_b * amp_d * amp_c;
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const double avg = 0.5 * (h(i, j) + h(j, i));
            h(i, j) = avg;
            h(j, i) = avg;
        }
    }
    return h;
}

CISpectrum solve_spectrum(const Matrix &hamiltonian, int count) {
    if (count < 1 || static_cast<std::size_t>(count) > hamiltonian.rows()) {
        throw InvalidArgument("requested " + std::to_string(count) + " eigenvalues from a dimension-" +
                              std::to_string(hamiltonian.rows()) + " problem");
    }
    const SymmetricEigen eig = jacobi_eigensolve(hamiltonian);
    CISpectrum out;
    out.energies.assign(eig.values.begin(), eig.values.begin() + count);
    out.gap = eig.values.size() > 1 ? eig.values[1] - eig.values[0] : 0.0;
    const auto g = eig.vectors.row(0);
    out.ground_state.assign(g.begin(), g.end());
    for (int k = 0; k < count; ++k) {
        out.max_residual = std::max(out.max_residual, eigen_residual(hamiltonian, eig.vectors.row(k), eig.values[k]));
    }
    return out;
}

CISpectrum ci_ground_spectrum(const Interaction &inter, int particles, int orbitals, Statistics statistics, int count,
                              Truncation truncation) {
    const FockBasis basis = build_fock_basis(particles, orbitals, statistics, truncation);
    const TwoBodyTensor tensor = two_body_tensor(inter, orbitals);
    return solve_spectrum(build_hamiltonian(basis, tensor), std::min<int>(count, static_cast<int>(basis.dimension())));
}

} // namespace jastrow1d
