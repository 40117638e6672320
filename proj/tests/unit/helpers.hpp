#pragma once

#include <string>

#include "jssp/generate.hpp"
#include "jssp/instance.hpp"
#include "jssp/schedule.hpp"

namespace jssp::testing {

/// J1 = ((m1,3),(m2,2)), J2 = ((m2,2),(m1,4)); machines 0-indexed here.
inline Instance i22() { return Instance({{{0, 3}, {1, 2}}, {{1, 2}, {0, 4}}}); }

/// Optimal schedule A (makespan 7).
inline MachineOrders i22_a() { return MachineOrders({{0, 1}, {1, 0}}); }
/// Schedule B (makespan 11): J1 first on both machines.
inline MachineOrders i22_b() { return MachineOrders({{0, 1}, {0, 1}}); }
/// Schedule C (makespan 11): J2 first on both machines.
inline MachineOrders i22_c() { return MachineOrders({{1, 0}, {1, 0}}); }

inline Instance random_small(int n, int m, std::uint64_t seed) {
  return random_instance({.n_jobs = n, .n_machines = m, .duration_low = 1, .duration_high = 100, .seed = seed});
}

inline std::string fixture(const std::string& name) { return std::string(JSSP_FIXTURE_DIR) + "/" + name; }

}  // namespace jssp::testing
