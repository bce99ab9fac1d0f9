"""GF(2^16) arithmetic with log/antilog tables, for polynomial GCD certificates.

Multivariate GCDs are certified by evaluating all but one variable at points
of GF(2^16) and taking a univariate GCD of the images: when the leading
coefficient survives the evaluation, the image GCD degree bounds the true
GCD degree from above, so a degree-0 image proves coprimality in that
variable.  Tables are built lazily on first use.
"""

from __future__ import annotations

ORDER = 1 << 16
_POLY_CANDIDATES = (0x1100B, 0x1002D, 0x14C3, 0x1B6B5)  # x^16 + ... candidates

_EXP = None
_LOG = None


def _build_tables():
    global _EXP, _LOG
    for modulus in _POLY_CANDIDATES:
        exp = [0] * (ORDER - 1)
        log = [0] * ORDER
        value = 1
        ok = True
        for i in range(ORDER - 1):
            if value == 1 and i > 0:
                ok = False  # x is not primitive for this modulus
                break
            exp[i] = value
            log[value] = i
            value <<= 1
            if value & ORDER:
                value ^= modulus
        if ok and value == 1:
            _EXP = exp + exp  # doubled to skip a mod in mul
            _LOG = log
            return
    raise RuntimeError("no primitive modulus found for GF(2^16)")


def tables():
    if _EXP is None:
        _build_tables()
    return _EXP, _LOG


def mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    exp, log = tables()
    return exp[log[a] + log[b]]


def inv(a: int) -> int:
    exp, log = tables()
    return exp[(ORDER - 1) - log[a]] if log[a] else 1


def power(a: int, e: int) -> int:
    if a == 0:
        return 0 if e else 1
    exp, log = tables()
    return exp[(log[a] * e) % (ORDER - 1)]


def poly_gcd_degree(a: list, b: list) -> int:
    """Degree of gcd of two univariate polynomials over GF(2^16).

    Coefficient lists are low-to-high; inputs must be nonzero.
    """
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, _trim(_mod(a, b))
    return len(a) - 1


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _mod(a, b):
    exp, log = tables()
    db = len(b) - 1
    lead_inv = inv(b[-1])
    a = list(a)
    while len(a) - 1 >= db and a:
        factor = mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        if factor:
            lf = log[factor]
            for i, coef in enumerate(b):
                if coef:
                    a[shift + i] ^= exp[lf + log[coef]]
        _trim(a)
        if not a:
            break
    return a
