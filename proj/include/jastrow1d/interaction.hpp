#pragma once

#include "jastrow1d/linalg.hpp"
#include "jastrow1d/oscillator.hpp"

#include <string>
#include <string_view>

namespace jastrow1d {

enum class InteractionKind { none, contact, soft_coulomb, quasi1d_coulomb, gaussian };

std::string_view to_string(InteractionKind k);
InteractionKind parse_interaction_kind(std::string_view name);

/// Pair potential V(x1 - x2) with strength g and range b. The range is only
/// meaningful (and required positive) for the finite-range kinds.
struct Interaction {
    InteractionKind kind = InteractionKind::none;
    double strength = 0.0;
    double range = 0.1;

    /// Validating constructor.
    static Interaction make(InteractionKind kind, double strength, double range = 0.1);

    bool uses_range() const;
    bool operator==(const Interaction &) const = default;
};

/// V(x). Contact interactions have no pointwise value and throw InvalidArgument.
double potential_value(const Interaction &inter, double x);

/// Half-line panel rule adequate for <m|V(scale x)|n> with m, n < basis_size.
QuadratureRule matrix_element_rule(const Interaction &inter, int basis_size, double scale);

/// <m|V(scale x)|n> for m, n < basis_size. Pointwise kinds are integrated on
/// the half line with `rule` (all potentials are even); contact uses
/// (g/scale) chi_m(0) chi_n(0). Entries with m + n odd are exactly zero.
Matrix potential_matrix(const Interaction &inter, int basis_size, const QuadratureRule &rule, double scale);

/// Same, with matrix_element_rule().
Matrix potential_matrix(const Interaction &inter, int basis_size, double scale);

} // namespace jastrow1d
