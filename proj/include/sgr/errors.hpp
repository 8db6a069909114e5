// Copyright 2026 the sgraphs authors
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

#include <stdexcept>
#include <string>

namespace sgr {

// A move (domino, half domino, row cancellation) was applied where its
// legality test fails.
struct IllegalMove : std::runtime_error {
    explicit IllegalMove(const std::string& what) : std::runtime_error(what) {}
};

// An operation that requires a complete diagram was given an incomplete one,
// or a similar precondition was violated.
struct Precondition : std::runtime_error {
    explicit Precondition(const std::string& what) : std::runtime_error(what) {}
};

// The bounded closure used for canonical keys exceeded its node budget.
// This would mean an equivalence class is not as small as the theory says.
struct ClosureDiverged : std::runtime_error {
    explicit ClosureDiverged(const std::string& what) : std::runtime_error(what) {}
};

// A function was asked to be rewritten in the r basis but does not lie in
// the span of r^1-r^2, ..., r^t-r^{t+1}.
struct NotInSpan : std::runtime_error {
    explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

// A relation set turned out to be cyclic, so it admits no linear extension.
struct CycleDetected : std::runtime_error {
    explicit CycleDetected(const std::string& what) : std::runtime_error(what) {}
};

// No path of the requested kind exists in the graph.
struct NoPath : std::runtime_error {
    explicit NoPath(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input (CLI flags, parse errors, out of range sizes).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Thrown rather than asserted so the
// CLI can report it and exit nonzero even in release builds.
struct InternalCheck : std::logic_error {
    explicit InternalCheck(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheck(what);
}

}  // namespace sgr
