// Copyright 2026 The concroc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace concroc {

// splitmix64 finalizer; used to derive independent per-task seeds.
std::uint64_t mix64(std::uint64_t x);

// Hash a master seed together with task coordinates (replicate index,
// scenario id, attempt...). The result only depends on the values, never on
// the order in which tasks are scheduled.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> coords);

// Random stream with platform-independent output. The engine is the
// standard mt19937_64; the conversions to doubles and bounded integers are
// done here because the std distributions are implementation-defined.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();

    // Uniform integer in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace concroc
