// SPDX-License-Identifier: Apache-2.0
//
// thzprop - sub-THz urban microcell propagation models and link budget tools
// Copyright (C) 2026 thzprop contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef THZPROP_RANDOM_HPP
#define THZPROP_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-based random streams: every draw is a pure function of
// (seed, sample index), so serial and parallel evaluation of a sample set
// produce bit-identical results in any order.

namespace thzprop::rng
{

inline constexpr std::uint64_t kGamma1 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kGamma2 = 0x632BE59BD9B4E019ULL;

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// The word-th 64-bit output of the stream keyed by (seed, index).
inline std::uint64_t word_at(std::uint64_t seed, std::uint64_t index, std::uint64_t word)
{
    return mix64(seed ^ mix64((index + 1) * kGamma1 + word * kGamma2));
}

/// Uniform draw in (0, 1] (never 0, so it is safe under log).
inline double uniform_pos_at(std::uint64_t seed, std::uint64_t index, std::uint64_t word)
{
    return static_cast<double>((word_at(seed, index, word) >> 11) + 1) * 0x1.0p-53;
}

/// Uniform draw in [0, 1).
inline double uniform01_at(std::uint64_t seed, std::uint64_t index, std::uint64_t word)
{
    return static_cast<double>(word_at(seed, index, word) >> 11) * 0x1.0p-53;
}

/// Standard normal draw for sample `index` (Box-Muller, cosine branch).
inline double normal_at(std::uint64_t seed, std::uint64_t index)
{
    const double u1 = uniform_pos_at(seed, index, 0);
    const double u2 = uniform01_at(seed, index, 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace thzprop::rng

#endif
