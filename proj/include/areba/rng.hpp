#ifndef AREBA_RNG_HPP
#define AREBA_RNG_HPP

#include <cstdint>

namespace areba {

/// splitmix64 output function. Used to derive independent, well-scrambled
/// seeds (per repetition, per ensemble member) from one master seed without
/// the correlation problems of seed + i.
inline std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// The (index+1)-th output of the splitmix64 stream started at master.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9e3779b97f4a7c15ULL);
}

}  // namespace areba

#endif
