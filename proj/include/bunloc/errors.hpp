/*
 * Copyright 2026 The bunloc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace bunloc {

// Error taxonomy shared by all components.  Each failure mode a caller can
// provoke gets its own type so tests can assert on it.

struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnitIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotTranslation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSelfDual : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotABundle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WindowExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace bunloc
