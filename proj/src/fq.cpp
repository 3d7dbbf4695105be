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

#include "bunloc/fq.hpp"

namespace bunloc::fq {

FqConfig::FqConfig(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 5)
        throw UnsupportedParams("supported field sizes are q = 2, 3, 5");
    for (int a = 0; a < q; ++a) {
        neg_[a] = static_cast<uint8_t>((q - a) % q);
        for (int b = 0; b < q; ++b) {
            add_[a * (kMaxQ + 1) + b] = static_cast<uint8_t>((a + b) % q);
            mul_[a * (kMaxQ + 1) + b] = static_cast<uint8_t>((a * b) % q);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if ((a * b) % q == 1) inv_[a] = static_cast<uint8_t>(b);
}

} // namespace bunloc::fq
