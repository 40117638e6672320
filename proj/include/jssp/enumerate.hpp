#pragma once

#include <cstdint>
#include <vector>

#include "jssp/instance.hpp"
#include "jssp/schedule.hpp"

namespace jssp {

struct EnumeratedSchedule {
  MachineOrders orders;
  Time makespan = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Every distinct feasible orientation with its makespan, found by walking all
/// job-order-respecting operation sequences and deduplicating the resulting
/// machine orders. Sorted by machine orders. Throws SizeError when the
/// number of sequences, (NM)!/(M!)^N, exceeds `cap`.
///
/// Brute force; meant as a test oracle for the exact solvers.
std::vector<EnumeratedSchedule> enumerate_all(const Instance& instance,
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// Minimum makespan over enumerate_all.
Time brute_force_optimum(const Instance& instance, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace jssp
