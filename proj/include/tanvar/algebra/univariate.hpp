/*
   Copyright 2026 The tanvar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TANVAR_ALGEBRA_UNIVARIATE_HPP
#define TANVAR_ALGEBRA_UNIVARIATE_HPP

#include <vector>

#include "tanvar/algebra/field.hpp"
#include "tanvar/algebra/rng.hpp"

namespace tanvar::univariate {

/// Dense univariate polynomial, coefficient i multiplies x^i. Always trimmed:
/// no trailing zeros, the zero polynomial is empty.
using Poly = std::vector<Scalar>;

void trim(const Field& f, Poly& p);
int degree(const Poly& p);
Poly derivative(const Field& f, const Poly& p);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
/// Remainder of a by b (b nonzero).
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly quot(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& p);
Poly gcd(const Field& f, Poly a, Poly b);
/// p / gcd(p, p'), monic. Valid in characteristic 0 or above deg p.
Poly squarefree_part(const Field& f, const Poly& p);
Scalar eval(const Field& f, const Poly& p, const Scalar& x);

/// Roots of p lying in the base field, sorted, without multiplicity. Over a
/// prime field this splits gcd(p, x^q - x) by Cantor-Zassenhaus; over the
/// rationals only roots of linear factors found by gcd with the derivative
/// chain are returned (degree-1 squarefree part).
std::vector<Scalar> roots(const Field& f, const Poly& p, Rng& rng);

}  // namespace tanvar::univariate

#endif  // TANVAR_ALGEBRA_UNIVARIATE_HPP
