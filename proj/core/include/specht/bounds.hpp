#pragma once

#include <cstdint>

namespace specht {

/// Enumeration and solver limits. Exceeding one raises ErrorKind::BoundExceeded.
struct Bounds {
    std::uint64_t max_partition_size = 60;     // d in enumerate_partitions
    std::uint64_t max_compositions = 2'000'000;
    std::uint64_t max_ideals = 4096;
    std::uint64_t max_tabloids = 200'000;
    std::uint64_t max_cocycle_unknowns = 50'000;
    std::uint64_t max_freudenthal_rank = 6;
};

} // namespace specht
