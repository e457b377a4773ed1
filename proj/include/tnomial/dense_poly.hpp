// Dense univariate polynomials over a prime field F_p.
//
// Coefficient vectors are little-endian (c[i] is the coefficient of x^i) with
// every entry reduced mod p and no trailing zeros. This representation backs
// irreducibility testing during field construction, squarefreeness checks,
// and the quotient-ring Frobenius witness; degrees stay small enough that
// schoolbook arithmetic is the right tool.
#pragma once

#include <cstdint>
#include <vector>

namespace tnomial::densepoly {

using Poly = std::vector<std::uint64_t>;

// Drops trailing zero coefficients; the zero polynomial becomes {}.
Poly trim(Poly a);

int degree(const Poly& a);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);

// Remainder of a modulo the monic-normalizable polynomial m (m need not be
// monic; its leading coefficient is inverted).
Poly rem(Poly a, const Poly& m, std::uint64_t p);

// a * b mod m.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);

// base^e mod m by square-and-multiply.
Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);

// x^e mod m.
Poly pow_x_mod(std::uint64_t e, const Poly& m, std::uint64_t p);

Poly derivative(const Poly& a, std::uint64_t p);

// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint64_t p);

// Rabin irreducibility test for monic f of degree >= 1 over F_p.
bool is_irreducible(const Poly& f, std::uint64_t p);

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p);

}  // namespace tnomial::densepoly
