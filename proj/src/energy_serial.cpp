// Serial reference reductions: one running accumulator over the grid in index order.

#include "grid_reduce.hpp"
#include "point_functions.hpp"

namespace jastrow1d::kernels::detail {

GridSums kinetic_sums_serial(const TensorGrid &grid, const KineticPoint &fn) { return reduce_serial(grid, fn); }

GridSums pair_potential_sums_serial(const TensorGrid &grid, const PairPotentialPoint &fn) {
    return reduce_serial(grid, fn);
}

GridSums coincidence_sums_serial(const TensorGrid &grid, const CoincidencePoint &fn) { return reduce_serial(grid, fn); }

} // namespace jastrow1d::kernels::detail
