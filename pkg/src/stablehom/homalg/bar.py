"""Normalized two-sided bar complex: an independent Tor oracle for tiny
categories (degenerate chains dropped; identical homology, smaller matrices)."""

from __future__ import annotations

from ..exactla import make_span


def bar_tor_oracle(G, F, max_degree, mor_cap=200):
    """Tor via the normalized bar complex; independent of resolve()."""
    assert G.cat is F.cat
    assert G.variance == "contra" and F.variance == "co"
    cat = G.cat
    field = cat.field
    if cat.n_morphisms() > mor_cap:
        raise ValueError(f"bar oracle restricted to categories with <= {mor_cap} morphisms")
    nonid = [m for m in range(cat.n_morphisms()) if not cat.is_identity(m)]
    # chains[n] = list of (start_obj, end_obj, tuple of mids f_1..f_n with
    # tgt(f_k) = src(f_(k+1)))
    chains = [[(o, o, ()) for o in range(cat.n_objects())]]
    for n in range(1, max_degree + 2):
        level = []
        for (s, e, fs) in chains[n - 1]:
            for m in nonid:
                if cat.src(m) == e:
                    level.append((s, cat.tgt(m), fs + (m,)))
        chains.append(level)

    def level_data(n):
        offs = []
        total = 0
        for (s, e, fs) in chains[n]:
            offs.append(total)
            total += G.dims[e] * F.dims[s]
        return offs, total

    index = [{c: i for i, c in enumerate(level)} for level in chains]
    data = [level_data(n) for n in range(max_degree + 2)]
    minus_one = field.neg(1)

    def face_sign(i):
        return 1 if i % 2 == 0 else minus_one

    ranks = [0] * (max_degree + 2)
    for n in range(1, max_degree + 2):
        offs_prev, total_prev = data[n - 1]
        if not chains[n] or total_prev == 0:
            continue
        span = make_span(field)
        for ci, (s, e, fs) in enumerate(chains[n]):
            dG, dF = G.dims[e], F.dims[s]
            for x in range(dG):
                for y in range(dF):
                    col = {}

                    def add(chain_key, gx_entries, fy_entries, sign):
                        pi = index[n - 1][chain_key]
                        base = offs_prev[pi]
                        s2 = chain_key[0]
                        dF2 = F.dims[s2]
                        for gi, gc in gx_entries:
                            for fi, fc in fy_entries:
                                key = base + gi * dF2 + fi
                                val = field.mul(field.mul(gc, fc), sign)
                                nv = field.add(col.get(key, 0), val)
                                if nv:
                                    col[key] = nv
                                elif key in col:
                                    del col[key]

                    # face 0: absorb f_1 into F
                    f1 = fs[0]
                    rest = fs[1:]
                    key0 = (cat.tgt(f1), e, rest)
                    add(key0, [(x, 1)],
                        list(F.col(f1, y).items()), face_sign(0))
                    # middle faces: compose f_(i+1) o f_i
                    for i in range(1, n):
                        h = cat.compose(fs[i], fs[i - 1])
                        if cat.is_identity(h):
                            continue  # degenerate face vanishes (normalized)
                        nfs = fs[:i - 1] + (h,) + fs[i + 1:]
                        add((s, e, nfs), [(x, 1)], [(y, 1)], face_sign(i))
                    # face n: absorb f_n into G
                    fn = fs[-1]
                    keyn = (s, cat.src(fn), fs[:-1])
                    add(keyn, list(G.col(fn, x).items()),
                        [(y, 1)], face_sign(n))
                    if col:
                        span.insert(col)
        ranks[n] = span.dim
    out = []
    for n in range(max_degree + 1):
        out.append(data[n][1] - ranks[n] - ranks[n + 1])
    return out
