#pragma once

#include "jastrow1d/energy_kernels.hpp"

#include <algorithm>
#include <vector>

namespace jastrow1d::kernels::detail {

// PointFn: bool(std::span<const double> coords, double &log_psi2, std::array<double, 3> &values)

template <class PointFn> GridSums reduce_serial(const TensorGrid &grid, PointFn &&fn) {
    GridSums acc;
    std::vector<double> coords(grid.dims());
    std::array<double, 3> values{};
    const std::size_t total = grid.size();
    for (std::size_t i = 0; i < total; ++i) {
        const double lw = grid.point(i, coords);
        double log_psi2 = 0.0;
        if (fn(coords, log_psi2, values)) {
            acc.add(lw + log_psi2, values);
        }
    }
    return acc;
}

template <class PointFn> GridSums reduce_chunked(const TensorGrid &grid, PointFn &&fn) {
    const std::size_t total = grid.size();
    const std::size_t chunks = (total + kChunkSize - 1) / kChunkSize;
    std::vector<GridSums> partial(chunks);
    const long long nchunks = static_cast<long long>(chunks);
#pragma omp parallel
    {
        std::vector<double> coords(grid.dims());
        std::array<double, 3> values{};
#pragma omp for schedule(static)
        for (long long c = 0; c < nchunks; ++c) {
            GridSums acc;
            const std::size_t begin = static_cast<std::size_t>(c) * kChunkSize;
            const std::size_t end = std::min(total, begin + kChunkSize);
            for (std::size_t i = begin; i < end; ++i) {
                const double lw = grid.point(i, coords);
                double log_psi2 = 0.0;
                if (fn(coords, log_psi2, values)) {
                    acc.add(lw + log_psi2, values);
                }
            }
            partial[static_cast<std::size_t>(c)] = acc;
        }
    }
    GridSums out;
    for (const auto &p : partial) {
        out.merge(p);
    }
    return out;
}

} // namespace jastrow1d::kernels::detail
