#pragma once

#include <cstdint>
#include <vector>

namespace zm {

// All primes p <= limit in ascending order.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Moebius function values mu(0..limit); mu(0) is set to 0.
std::vector<int> moebius_table(std::uint64_t limit);

}  // namespace zm
