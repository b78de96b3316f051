"""Recomputes the constants frozen into the C++ tests with plain polynomial
arithmetic over Z and F_p, sharing no code with the library.

Run: python3 tests/oracles/derive_values.py
"""

from itertools import product

from sympy import GF, Poly, ZZ, factor_list, resultant, symbols

x, t = symbols("x t")
PHI5 = Poly(x**4 + x**3 + x**2 + x + 1, x)


def reduce_z(expr):
    return Poly(expr, x).rem(PHI5)


def coeffs4(p):
    c = p.all_coeffs()[::-1]
    return tuple(int(v) for v in c) + (0,) * (4 - len(c))


def field_factor(p, gen):
    """The factor of PHI5 mod p on which gen (a polynomial in x) vanishes."""
    _, facs = factor_list(PHI5.as_expr(), modulus=p)
    facs = sorted(Poly(f, x, modulus=p) for f, _ in facs)
    for f in facs:
        if Poly(gen, x, modulus=p).rem(f).is_zero:
            return f
    raise ValueError("no factor")


def symbol_exponent(alpha, p, gen):
    g = field_factor(p, gen)
    order = p ** g.degree()
    a = Poly(alpha, x, modulus=p).rem(g)
    w = pow_mod(a, (order - 1) // 5, g, p)
    z = Poly(x, x, modulus=p).rem(g)
    cur = Poly(1, x, modulus=p)
    for k in range(5):
        if (cur - w).rem(g).is_zero:
            return k
        cur = (cur * z).rem(g)
    raise ValueError("not a fifth root of unity")


def pow_mod(a, e, g, p):
    r = Poly(1, x, modulus=p)
    while e:
        if e & 1:
            r = (r * a).rem(g)
        a = (a * a).rem(g)
        e >>= 1
    return r


def fifth_powers_count(p, gen):
    g = field_factor(p, gen)
    f = g.degree()
    seen = set()
    for cs in product(range(p), repeat=f):
        if not any(cs):
            continue
        a = Poly(list(cs[::-1]), x, modulus=p)
        seen.add(tuple(pow_mod(a, 5, g, p).all_coeffs()))
    return len(seen)


def norm(expr):
    return int(resultant(PHI5.as_expr(), expr, x))


def main():
    print("(1+z)(1+z^4) =", coeffs4(reduce_z((1 + x) * (1 + x**4))))
    print("norm(1+z) =", norm(1 + x))
    print("norm(1-z) =", norm(1 - x))
    print("roots of PHI5 mod 11 =", [r for r in range(11) if PHI5.eval(r) % 11 == 0])
    print("(zeta/2) =", symbol_exponent(x, 2, 2))
    print("(2/3) =", symbol_exponent(2, 3, 3))
    print("(lambda/3) =", symbol_exponent(1 - x, 3, 3))
    print("(lambda/7) =", symbol_exponent(1 - x, 7, 7))
    print("(lambda/2) =", symbol_exponent(1 - x, 2, 2))
    print("(zeta/7) =", symbol_exponent(x, 7, 7))
    print("|F_16*^5| =", fifth_powers_count(2, 2))
    print("|F_81*^5| =", fifth_powers_count(3, 3))
    # product of g(root) over the roots of the monic t^5 - n
    print("N(1+theta), n=301 =", int(resultant(t**5 - 301, 1 + t, t)))
    print("N(2+theta-theta^2), n=30 =", int(resultant(t**5 - 30, 2 + t - t**2, t)))
    # fourth powers mod 25
    print("r^4 = 1 mod 25:", [r for r in range(25) if r % 5 and pow(r, 4, 25) == 1])


if __name__ == "__main__":
    main()
