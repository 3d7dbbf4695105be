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

#include <cstdint>
#include <map>
#include <string>

namespace bunloc {

// Univariate Laurent polynomial over the integers, in the formal variable z.
// No zero coefficients are stored; iteration over coeffs is by ascending
// exponent.  Used for SL(2) characters and K-theoretic bookkeeping.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exp, long long coeff) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    const std::map<int, long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    long long coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = c_.emplace(exp, 0);
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
        (void)fresh;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, v] : o.c_) r.add_term(e, v);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, v] : o.c_) r.add_term(e, -v);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, v1] : c_)
            for (auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    // Weyl symmetry c_n = c_{-n}.
    bool is_symmetric() const {
        for (auto& [e, v] : c_)
            if (coeff(-e) != v) return false;
        return true;
    }

    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    // Prints by descending exponent, e.g. "z^2 + 1 + z^-2".
    std::string to_string(const std::string& var = "z") const;

  private:
    std::map<int, long long> c_;
};

} // namespace bunloc
