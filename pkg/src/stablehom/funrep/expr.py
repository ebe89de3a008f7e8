"""Functor expressions as plain tuples.

('Id',) ('Const', d) ('S', n) ('L', n) ('G', n) ('T', n)
('KQ2', dual) ('KALT2', dual) ('Pbar',) ('Proj', c)
('Dual', e) ('Delta', e) ('Tensor', a, b) ('Sum', a, b) ('Compose', outer, inner)

The concrete syntax lives in the CLI module; this is the canonical AST, used
as hash keys by the caches.
"""


def ID():
    return ("Id",)


def CONST(d):
    return ("Const", d)


def S(n):
    return ("S", n)


def L(n):
    return ("L", n)


def G(n):
    return ("G", n)


def T(n):
    return ("T", n)


def KQ2(dual=False):
    return ("KQ2", bool(dual))


def KALT2(dual=False):
    return ("KALT2", bool(dual))


def PBAR():
    return ("Pbar",)


def PROJ(c):
    return ("Proj", c)


def DUAL(e):
    return ("Dual", e)


def DELTA(e):
    return ("Delta", e)


def TENSOR(a, b):
    return ("Tensor", a, b)


def SUM(a, b):
    return ("Sum", a, b)


def COMPOSE(outer, inner):
    return ("Compose", outer, inner)


def expr_text(e):
    """Canonical concrete syntax (parse . print is the identity on it)."""
    tag = e[0]
    if tag == "Id":
        return "Id"
    if tag == "Const":
        return f"Const({e[1]})"
    if tag in ("S", "L", "G", "T"):
        return f"{tag}^{e[1]}"
    if tag == "KQ2":
        return "K[q2]^v" if e[1] else "K[q2]"
    if tag == "KALT2":
        return "K[alt2]^v" if e[1] else "K[alt2]"
    if tag == "Pbar":
        return "Pbar"
    if tag == "Proj":
        return f"Proj({e[1]})"
    if tag == "Dual":
        return f"({expr_text(e[1])})^v" if len(e[1]) > 1 or e[1][0] not in ("Id", "Pbar") \
            else f"{expr_text(e[1])}^v"
    if tag == "Delta":
        return f"Delta({expr_text(e[1])})"
    if tag == "Tensor":
        return f"{_paren(e[1], 'Tensor')} (x) {_paren(e[2], 'Tensor')}"
    if tag == "Sum":
        return f"{_paren(e[1], 'Sum')} (+) {_paren(e[2], 'Sum')}"
    if tag == "Compose":
        return f"{_paren(e[1], 'Compose')} o {_paren(e[2], 'Compose')}"
    raise ValueError(f"unknown expression node {e!r}")


_PREC = {"Sum": 0, "Tensor": 1, "Compose": 2}


def _paren(e, context):
    txt = expr_text(e)
    if e[0] in _PREC and _PREC[e[0]] < _PREC[context]:
        return f"({txt})"
    if e[0] == context and context in ("Tensor", "Sum"):
        return f"({txt})"
    return txt
