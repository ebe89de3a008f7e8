"""Checker for the stabilization-framework axioms on a truncated category.

Axioms are checked within the truncation: a search that fails only because it
ran out of range is reported as 'inconclusive', never as 'fail'.  Genuine
counterexamples (a non-transitive orbit, a stabilizer mismatch) are failures
and carry a witness.
"""

from __future__ import annotations

from .builders import StableSequence

AXIOMS = ("C", "W", "W'", "G", "S", "C'")


def check_axioms(cat, seq: StableSequence, axioms=AXIOMS):
    """Returns {axiom: {'status': 'pass'|'fail'|'inconclusive', ...}}."""
    report = {}
    for ax in axioms:
        fn = _CHECKS[ax]
        report[ax] = fn(cat, seq)
    return report


def _check_c(cat, seq):
    missing = []
    witness = {}
    for c in range(cat.n_objects()):
        found = None
        for i in range(seq.nmax + 1):
            hom = cat.hom(c, seq.obj(i))
            if hom:
                found = (i, hom[0])
                break
        if found is None:
            missing.append(c)
        else:
            witness[c] = found
    if missing:
        return {"status": "inconclusive", "missing_objects": missing,
                "note": "no morphism into any S(i) within the truncation"}
    return {"status": "pass", "witnesses": len(witness)}


def _check_w_prime(cat, seq):
    for i in range(seq.nmax + 1):
        si = seq.obj(i)
        auts = cat.automorphisms(si)
        for c in range(cat.n_objects()):
            hom = cat.hom(c, si)
            if len(hom) <= 1:
                continue
            orbit = {hom[0]}
            frontier = [hom[0]]
            while frontier:
                u = frontier.pop()
                for g in auts:
                    v = cat.compose(g, u)
                    if v not in orbit:
                        orbit.add(v)
                        frontier.append(v)
            if len(orbit) != len(hom):
                out = next(m for m in hom if m not in orbit)
                return {"status": "fail",
                        "witness": {"object": c, "i": i,
                                    "u": hom[0], "v": out}}
    return {"status": "pass"}


def _check_w(cat, seq):
    unresolved = []
    for i in range(seq.nmax + 1):
        si = seq.obj(i)
        for c in range(cat.n_objects()):
            hom = cat.hom(c, si)
            for a in range(len(hom)):
                for b in range(a + 1, len(hom)):
                    u, v = hom[a], hom[b]
                    ok = False
                    for j in range(i, seq.nmax + 1):
                        incl = seq.incl(i, j)
                        uu = cat.compose(incl, u)
                        vv = cat.compose(incl, v)
                        for g in cat.automorphisms(seq.obj(j)):
                            if cat.compose(g, uu) == vv:
                                ok = True
                                break
                        if ok:
                            break
                    if not ok:
                        unresolved.append({"object": c, "i": i, "u": u, "v": v})
    if unresolved:
        return {"status": "inconclusive", "unresolved": unresolved[:5],
                "count": len(unresolved),
                "note": "no stabilizing automorphism found within the truncation"}
    return {"status": "pass"}


def _check_g(cat, seq):
    for i in range(seq.nmax + 1):
        for j in range(i, seq.nmax + 1):
            incl = seq.incl(i, j)
            for g in cat.automorphisms(seq.obj(i)):
                ext = seq.extend_aut(g, i, j)
                if cat.compose(incl, g) != cat.compose(ext, incl):
                    return {"status": "fail",
                            "witness": {"i": i, "j": j, "g": g}}
    return {"status": "pass"}


def _stabilizer(cat, obj, f_mid):
    return [g for g in cat.automorphisms(obj) if cat.compose(g, f_mid) == f_mid]


def _check_s(cat, seq):
    checked = 0
    for f_mid in range(cat.n_morphisms()):
        d = cat.src(f_mid)
        c = cat.tgt(f_mid)
        stab_c = _stabilizer(cat, c, f_mid)
        for i in range(seq.nmax + 1):
            big_f = seq.oplus_mor(i, f_mid)
            if big_f is None:
                continue
            big_c = cat.tgt(big_f)
            stab_big = _stabilizer(cat, big_c, big_f)
            image = set()
            for g in stab_c:
                gg = seq.oplus_mor(i, g)
                if gg is None or gg not in set(stab_big):
                    return {"status": "fail",
                            "witness": {"f": f_mid, "i": i, "g": g,
                                        "reason": "S(i)+g does not stabilize"}}
                image.add(gg)
            if len(image) != len(stab_c) or len(stab_big) != len(stab_c):
                return {"status": "fail",
                        "witness": {"f": f_mid, "i": i,
                                    "stab_size": len(stab_c),
                                    "extended_stab_size": len(stab_big)}}
            checked += 1
    if checked == 0:
        return {"status": "inconclusive",
                "note": "no (f, i) pair fits within the truncation"}
    return {"status": "pass", "pairs_checked": checked}


def _check_c_prime(cat, seq):
    if seq.obj_sum is None:
        return {"status": "inconclusive", "note": "sequence has no object sum"}
    missing = []
    for c in range(cat.n_objects()):
        found = False
        for i in range(seq.nmax + 1):
            si = seq.obj(i)
            for b in range(cat.n_objects()):
                total = seq.obj_sum(b, c)
                if total is None:
                    continue
                if total == si or any(cat.is_invertible(f) is not None
                                      for f in cat.hom(total, si)):
                    found = True
                    break
            if found:
                break
        if not found:
            missing.append(c)
    if missing:
        return {"status": "inconclusive", "missing_objects": missing,
                "note": "no complement found within the truncation"}
    return {"status": "pass"}


_CHECKS = {
    "C": _check_c,
    "W": _check_w,
    "W'": _check_w_prime,
    "G": _check_g,
    "S": _check_s,
    "C'": _check_c_prime,
}
