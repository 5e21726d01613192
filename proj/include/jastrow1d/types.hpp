#pragma once

#include <string>
#include <string_view>

namespace jastrow1d {

enum class Statistics { bosons, fermions };
enum class Parity { even, odd };

// Bosons pair with an even relative state, spin-polarized fermions with an odd one.
constexpr Parity parity_for(Statistics s) { return s == Statistics::bosons ? Parity::even : Parity::odd; }

std::string_view to_string(Statistics s);
std::string_view to_string(Parity p);
Statistics parse_statistics(std::string_view name);

} // namespace jastrow1d
