#pragma once

#include "jastrow1d/interaction.hpp"
#include "jastrow1d/linalg.hpp"
#include "jastrow1d/types.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace jastrow1d {

inline constexpr int kMaxCiOrbitals = 20;
inline constexpr int kMaxCiParticles = 4;

/// Which occupation configurations over orbitals 0..M-1 are kept.
///  - orbitals: every configuration (dimension C(M,N) or C(M+N-1,N)).
///  - total_quanta: only configurations with sum of orbital indices <= M-1.
///    This shell is closed under the centre-of-mass / relative split, so N = 2
///    reproduces the relative problem in an M-orbital basis exactly.
enum class Truncation { orbitals, total_quanta };

std::string_view to_string(Truncation t);
Truncation parse_truncation(std::string_view name);

/// Occupation configurations stored as ascending orbital-index lists
/// (repeated indices allowed for bosons), sorted lexicographically.
struct FockBasis {
    int particles = 0;
    int orbitals = 0;
    Statistics statistics = Statistics::bosons;
    Truncation truncation = Truncation::orbitals;
    std::vector<std::vector<int>> states;

    std::size_t dimension() const { return states.size(); }
    std::optional<std::size_t> index_of(const std::vector<int> &state) const;
};

FockBasis build_fock_basis(int particles, int orbitals, Statistics statistics,
                           Truncation truncation = Truncation::orbitals);

/// V[a][b][c][d] = \iint chi_a(x) chi_b(y) V(x - y) chi_c(x) chi_d(y) dx dy.
class TwoBodyTensor {
  public:
    explicit TwoBodyTensor(int size) : size_(size), data_(static_cast<std::size_t>(size) * size * size * size, 0.0) {}

    int size() const { return size_; }
    double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }
    double &operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }

  private:
    std::size_t index(int a, int b, int c, int d) const {
        return ((static_cast<std::size_t>(a) * size_ + b) * size_ + c) * size_ + d;
    }
    int size_;
    std::vector<double> data_;
};

/// Coefficients of chi_a(x) chi_b(y) in the product basis chi_{a+b-n}(R) chi_n(r),
/// R = (x + y)/sqrt(2), r = (x - y)/sqrt(2). Entry [a][b][n], a + b <= max_total.
class PairTransformation {
  public:
    explicit PairTransformation(int max_total);

    int max_total() const { return max_total_; }
    double operator()(int a, int b, int n) const;

  private:
    int max_total_;
    std::vector<std::vector<std::vector<double>>> coeff_;
};

/// Tensor for orbitals 0..size-1. Contact uses g \int chi_a chi_b chi_c chi_d dx;
/// the finite-range kinds go through relative-coordinate matrix elements and
/// the pair transformation, which resolves the cusp of V along x = y.
TwoBodyTensor two_body_tensor(const Interaction &inter, int size);

/// Tensor through the relative-coordinate route for every kind (contact included).
TwoBodyTensor two_body_tensor_relative(const Interaction &inter, int size);

/// Dense second-quantized Hamiltonian in the Fock basis.
Matrix build_hamiltonian(const FockBasis &basis, const TwoBodyTensor &tensor);

struct CISpectrum {
    std::vector<double> energies; // ascending
    double gap = 0.0;
    std::vector<double> ground_state;
    double max_residual = 0.0;
};

CISpectrum solve_spectrum(const Matrix &hamiltonian, int count);

/// Basis, tensor, Hamiltonian and spectrum in one call.
CISpectrum ci_ground_spectrum(const Interaction &inter, int particles, int orbitals, Statistics statistics,
                              int count = 4, Truncation truncation = Truncation::total_quanta);

} // namespace jastrow1d
