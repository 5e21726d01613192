#include "jastrow1d/interaction.hpp"

#include "jastrow1d/errors.hpp"
#include "jastrow1d/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace jastrow1d {

std::string_view to_string(InteractionKind k) {
    switch (k) {
    case InteractionKind::none:
        return "none";
    case InteractionKind::contact:
        return "contact";
    case InteractionKind::soft_coulomb:
        return "soft_coulomb";
    case InteractionKind::quasi1d_coulomb:
        return "quasi1d_coulomb";
    case InteractionKind::gaussian:
        return "gaussian";
    }
    return "unknown";
}

InteractionKind parse_interaction_kind(std::string_view name) {
    for (auto k : {InteractionKind::none, InteractionKind::contact, InteractionKind::soft_coulomb,
                   InteractionKind::quasi1d_coulomb, InteractionKind::gaussian}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw InvalidArgument("unknown interaction '" + std::string(name) +
                          "' (expected none, contact, soft_coulomb, quasi1d_coulomb or gaussian)");
}

bool Interaction::uses_range() const {
    return kind == InteractionKind::soft_coulomb || kind == InteractionKind::quasi1d_coulomb ||
           kind == InteractionKind::gaussian;
}

Interaction Interaction::make(InteractionKind kind, double strength, double range) {
    Interaction out{kind, strength, range};
    if (!std::isfinite(strength)) {
        throw InvalidArgument("interaction strength must be finite");
    }
    if (out.uses_range() && !(range > 0.0 && std::isfinite(range))) {
        throw InvalidArgument("interaction range b must be positive for " + std::string(to_string(kind)));
    }
    return out;
}

double potential_value(const Interaction &inter, double x) {
    const double g = inter.strength;
    const double b = inter.range;
    switch (inter.kind) {
    case InteractionKind::none:
        return 0.0;
    case InteractionKind::contact:
        throw InvalidArgument("contact interaction has no pointwise value");
    case InteractionKind::soft_coulomb:
        return g / std::sqrt(x * x + b * b);
    case InteractionKind::quasi1d_coulomb:
        // Coulomb averaged over a transverse Gaussian of width b.
        return g * std::sqrt(0.5 * std::numbers::pi) / b * erfcx(std::abs(x) / (std::numbers::sqrt2 * b));
    case InteractionKind::gaussian:
        return g / (std::sqrt(2.0 * std::numbers::pi) * b) * std::exp(-0.5 * x * x / (b * b));
    }
    return 0.0;
}

namespace {

// Orbitals of index < M are negligible beyond this point (chi_n ~ exp(-x^2/2)
// past the classical turning point sqrt(2n+1)).
double orbital_extent(int basis_size) { return std::sqrt(2.0 * basis_size + 1.0) + 9.0; }

} // namespace

QuadratureRule matrix_element_rule(const Interaction &inter, int basis_size, double scale) {
    // Panels resolve the structure of V(scale x) near the origin, on the scale b / scale.
    const double core = inter.uses_range() ? inter.range / scale : 1.0;
    return graded_half_line_rule(core, orbital_extent(basis_size), 20);
}

Matrix potential_matrix(const Interaction &inter, int basis_size, const QuadratureRule &rule, double scale) {
    if (basis_size < 1 || basis_size > kMaxHermiteOrder) {
        throw InvalidArgument("potential_matrix: basis size out of range");
    }
    if (!(scale > 0.0)) {
        throw InvalidArgument("potential_matrix: scale must be positive");
    }
    const auto m = static_cast<std::size_t>(basis_size);
    Matrix out = Matrix::square(m);
    if (inter.kind == InteractionKind::none) {
        return out;
    }
    std::vector<double> chi(m);
    if (inter.kind == InteractionKind::contact) {
        // delta(scale x) = delta(x) / scale
        ho_orbitals(0.0, chi);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                const double v = (i + j) % 2 == 0 ? inter.strength / scale * chi[i] * chi[j] : 0.0;
                out(i, j) = v;
                out(j, i) = v;
            }
        }
        return out;
    }

    if (rule.order() == 0 || rule.nodes.front() < 0.0 || rule.nodes.back() < 0.5 * orbital_extent(basis_size)) {
        throw InvalidArgument("potential_matrix: quadrature rule does not cover the orbital extent");
    }
    // Tabulate w_i V(scale x_i) chi_n(x_i) once; each entry is then a fixed-order dot product.
    const std::size_t q = rule.nodes.size();
    Matrix table(m, q);
    std::vector<double> weighted(q);
    for (std::size_t i = 0; i < q; ++i) {
        const double x = rule.nodes[i];
        ho_orbitals(x, chi);
        weighted[i] = 2.0 * rule.weights[i] * potential_value(inter, scale * x);
        for (std::size_t n = 0; n < m; ++n) {
            table(n, i) = chi[n];
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        const auto ra = table.row(a);
        for (std::size_t b = a; b < m; b += 2) {
            const auto rb = table.row(b);
            double s = 0.0;
            for (std::size_t i = 0; i < q; ++i) {
                s += weighted[i] * ra[i] * rb[i];
            }
            out(a, b) = s;
            out(b, a) = s;
        }
    }
    return out;
}

Matrix potential_matrix(const Interaction &inter, int basis_size, double scale) {
    return potential_matrix(inter, basis_size, matrix_element_rule(inter, basis_size, scale), scale);
}

} // namespace jastrow1d
