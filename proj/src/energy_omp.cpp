// OpenMP reductions over fixed-size chunks, merged in chunk order.

#include "grid_reduce.hpp"
#include "point_functions.hpp"

namespace jastrow1d::kernels::detail {

GridSums kinetic_sums_parallel(const TensorGrid &grid, const KineticPoint &fn) { return reduce_chunked(grid, fn); }

GridSums pair_potential_sums_parallel(const TensorGrid &grid, const PairPotentialPoint &fn) {
    return reduce_chunked(grid, fn);
}

GridSums coincidence_sums_parallel(const TensorGrid &grid, const CoincidencePoint &fn) {
    return reduce_chunked(grid, fn);
}

} // namespace jastrow1d::kernels::detail
