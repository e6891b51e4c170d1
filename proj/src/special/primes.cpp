#include "zetamoments/primes.hpp"

#include <stdexcept>

namespace zm {

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    if (limit > 4000000000ULL) throw std::invalid_argument("primes_up_to: limit too large");
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

std::vector<int> moebius_table(std::uint64_t limit) {
    std::vector<int> mu(limit + 1, 1);
    mu[0] = 0;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (j > i) composite[j] = true;
            mu[j] = -mu[j];
        }
        for (std::uint64_t j = i * i; j <= limit; j += i * i) mu[j] = 0;
    }
    return mu;
}

}  // namespace zm
