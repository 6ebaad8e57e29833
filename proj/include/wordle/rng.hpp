#pragma once

#include <cstdint>
#include <random>

namespace wordle {

// splitmix64, used to derive independent stream seeds from one root seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// All randomness in the project flows from a root seed through named
// streams: stream k of seed s is an mt19937_64 seeded with
// splitmix64(s ^ splitmix64(k)).  Streams are independent for distinct k.
inline std::mt19937_64 make_stream(std::uint64_t root_seed, std::uint64_t stream_id) {
  return std::mt19937_64(splitmix64(root_seed ^ splitmix64(stream_id)));
}

}  // namespace wordle
