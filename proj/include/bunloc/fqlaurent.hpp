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
#include <string>
#include <vector>

#include "bunloc/fq.hpp"

namespace bunloc::fq {

// Laurent polynomial in t over F_q.  Coefficients stored densely from the
// lowest exponent; always trimmed so that is_zero() means an empty vector.
class FqLaurent {
  public:
    FqLaurent() = default;

    static FqLaurent monomial(uint8_t c, int exp);
    static FqLaurent constant(uint8_t c) { return monomial(c, 0); }

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }              // valuation (lowest exponent)
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    uint8_t coeff(int exp) const;
    bool is_monomial() const { return c_.size() == 1; }

    FqLaurent add(const FqLaurent& o, const FqConfig& F) const;
    FqLaurent sub(const FqLaurent& o, const FqConfig& F) const;
    FqLaurent mul(const FqLaurent& o, const FqConfig& F) const;
    FqLaurent scale(uint8_t c, const FqConfig& F) const;
    FqLaurent shifted(int k) const; // multiply by t^k
    uint8_t eval(uint8_t x, const FqConfig& F) const; // requires lo() >= 0
    uint8_t eval_laurent(uint8_t x, const FqConfig& F) const; // requires x != 0

    bool operator==(const FqLaurent& o) const { return lo_ == o.lo_ && c_ == o.c_; }
    std::string to_string() const;

  private:
    void trim();
    int lo_ = 0;
    std::vector<uint8_t> c_;
};

// 2x2 matrix of Laurent polynomials, acting on column vectors.
struct FqLMat {
    std::array<FqLaurent, 4> a;

    static FqLMat identity();
    static FqLMat diag(const FqLaurent& d0, const FqLaurent& d1);
    static FqLMat from_units(uint8_t a00, uint8_t a01, uint8_t a10, uint8_t a11);

    const FqLaurent& at(int r, int c) const { return a[2 * r + c]; }
    FqLaurent& at(int r, int c) { return a[2 * r + c]; }

    FqLMat mul(const FqLMat& o, const FqConfig& F) const;
    FqLaurent det(const FqConfig& F) const;
    int max_abs_degree() const;
    bool operator==(const FqLMat& o) const { return a == o.a; }
    std::string to_string() const;
};

// Birkhoff factorization g = u_minus * diag(t^k0, t^k1) * u_plus with
// u_minus in GL_2(F_q[t^-1]) and u_plus in GL_2(F_q[t]), k0 <= k1.
struct Birkhoff {
    FqLMat u_minus;
    int k0 = 0, k1 = 0;
    FqLMat u_plus;
};

// Requires det(g) to be a unit monomial; throws NotABundle otherwise and
// WindowExceeded if intermediate degrees leave [-window, window].
Birkhoff birkhoff_factor(const FqLMat& g, const FqConfig& F, int window);

// Splitting gap |k1 - k0| of the Birkhoff normal form.
int splitting_type(const FqLMat& g, const FqConfig& F, int window);

// Exact division of a Laurent polynomial by a polynomial divisor; throws
// when the division leaves a remainder.
FqLaurent laurent_div_exact(const FqLaurent& p, const FqLaurent& q, const FqConfig& F);

} // namespace bunloc::fq
