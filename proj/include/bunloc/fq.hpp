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

#include <array>
#include <cstdint>

#include "bunloc/errors.hpp"

namespace bunloc::fq {

// Prime field arithmetic with precomputed tables, q in {2, 3, 5}.
class FqConfig {
  public:
    static constexpr int kMaxQ = 5;

    explicit FqConfig(int q);

    int q() const { return q_; }
    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * (kMaxQ + 1) + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * (kMaxQ + 1) + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw ZeroDivisor("inverse of 0 in F_q");
        return inv_[a];
    }
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

  private:
    int q_;
    std::array<uint8_t, (kMaxQ + 1) * (kMaxQ + 1)> add_{};
    std::array<uint8_t, (kMaxQ + 1) * (kMaxQ + 1)> mul_{};
    std::array<uint8_t, kMaxQ + 1> neg_{};
    std::array<uint8_t, kMaxQ + 1> inv_{};
};

} // namespace bunloc::fq
