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

#include <gmpxx.h>

#include <string>

#include "bunloc/errors.hpp"

namespace bunloc {

// Exact rational arithmetic.  GMP's mpq_class already maintains the canonical
// form we need: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ZeroDivisor("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (r.get_den() == 0) throw ZeroDivisor("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace bunloc
