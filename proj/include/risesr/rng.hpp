// SPDX-License-Identifier: Apache-2.0
//
// risesr - secrecy-rate optimization for RIS-assisted MISO wiretap links
// Copyright (C) 2026 The risesr authors
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

#pragma once

#include <cstdint>
#include <random>

namespace risesr {

// Seeding scheme for reproducible, order-independent Monte-Carlo runs.
//
// A run has one master seed. Every independent random consumer is keyed by
// (realization index, attempt, purpose) and gets its own engine whose seed is
//
//     s = mix(mix(mix(master) ^ realization) ^ (attempt << 8 | purpose))
//
// where mix is the SplitMix64 finalizer. Streams never depend on how work is
// scheduled across threads.
enum class StreamPurpose : std::uint64_t {
    kChannels = 1,
    kSolverStarts = 2,
    kSynthetic = 3,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t realization,
                                    std::uint64_t attempt, StreamPurpose purpose) noexcept
{
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ realization);
    return splitmix64(s ^ ((attempt << 8) | static_cast<std::uint64_t>(purpose)));
}

using Rng = std::mt19937_64;

inline Rng make_stream(std::uint64_t master, std::uint64_t realization, std::uint64_t attempt,
                       StreamPurpose purpose)
{
    return Rng(derive_seed(master, realization, attempt, purpose));
}

} // namespace risesr
