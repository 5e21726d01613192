#include "jastrow1d/types.hpp"

#include "jastrow1d/errors.hpp"

namespace jastrow1d {

std::string_view to_string(Statistics s) { return s == Statistics::bosons ? "bosons" : "fermions"; }

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Statistics parse_statistics(std::string_view name) {
    if (name == "bosons") {
        return Statistics::bosons;
    }
    if (name == "fermions") {
        return Statistics::fermions;
    }
    throw InvalidArgument("unknown statistics '" + std::string(name) + "' (expected bosons or fermions)");
}

} // namespace jastrow1d
