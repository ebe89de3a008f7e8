"""Finite categories with explicit objects, hom-sets and composition.

Objects and morphisms are referenced by dense integer ids assigned in
enumeration order; payloads are hashable tuples.  Composition goes through a
payload-level composer plus an index lookup, cached on demand (a total table
would be quadratic in the morphism count for no benefit).
"""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured cap."""


class FinCat:
    def __init__(self, kind, objects, field=None, params=None):
        self.kind = kind
        self.field = field
        self.params = dict(params or {})
        self.objects = list(objects)
        self.obj_index = {p: i for i, p in enumerate(self.objects)}
        self.morphisms = []          # list of (src, tgt, payload)
        self.mor_index = {}          # (src, tgt, payload) -> mid
        self.identity = [None] * len(self.objects)
        self._hom = {}               # (src, tgt) -> list of mids
        self._compose_cache = {}
        self.compose_payload = None  # (tgt_payloads aware) (gp, fp) -> payload
        self.generators = None       # list of mids; None means all
        self.mono = False
        self.pullbacks = False

    # -- construction -------------------------------------------------------

    def add_object(self, payload):
        if payload in self.obj_index:
            return self.obj_index[payload]
        self.objects.append(payload)
        self.obj_index[payload] = len(self.objects) - 1
        self.identity.append(None)
        return len(self.objects) - 1

    def add_morphism(self, src, tgt, payload):
        key = (src, tgt, payload)
        mid = self.mor_index.get(key)
        if mid is not None:
            return mid
        mid = len(self.morphisms)
        self.morphisms.append(key)
        self.mor_index[key] = mid
        self._hom.setdefault((src, tgt), []).append(mid)
        return mid

    def set_identity(self, obj, mid):
        self.identity[obj] = mid

    def finish(self):
        if self.generators is None:
            self.generators = list(range(len(self.morphisms)))
        return self

    # -- accessors ------------------------------------------------------------

    def n_objects(self):
        return len(self.objects)

    def n_morphisms(self):
        return len(self.morphisms)

    def src(self, mid):
        return self.morphisms[mid][0]

    def tgt(self, mid):
        return self.morphisms[mid][1]

    def payload(self, mid):
        return self.morphisms[mid][2]

    def hom(self, a, b):
        return self._hom.get((a, b), [])

    def is_identity(self, mid):
        return self.identity[self.src(mid)] == mid

    def mid_of(self, src, tgt, payload):
        return self.mor_index[(src, tgt, payload)]

    def compose(self, g, f):
        """Composite g o f (apply f first)."""
        key = (g, f)
        out = self._compose_cache.get(key)
        if out is not None:
            return out
        fs, ft, fp = self.morphisms[f]
        gs, gt, gp = self.morphisms[g]
        if ft != gs:
            raise ValueError("morphisms not composable")
        payload = self.compose_payload(gp, fp)
        out = self.mor_index.get((fs, gt, payload))
        if out is None:
            raise ValueError("category not closed under composition")
        self._compose_cache[key] = out
        return out

    def automorphisms(self, obj):
        """Mids of invertible endomorphisms of obj."""
        ident = self.identity[obj]
        out = []
        for f in self.hom(obj, obj):
            for g in self.hom(obj, obj):
                if self.compose(f, g) == ident and self.compose(g, f) == ident:
                    out.append(f)
                    break
        return out

    def is_invertible(self, mid):
        a, b, _ = self.morphisms[mid]
        for g in self.hom(b, a):
            if (self.compose(g, mid) == self.identity[a]
                    and self.compose(mid, g) == self.identity[b]):
                return g
        return None

    # -- derived categories ------------------------------------------------------

    def op(self):
        C = FinCat("op:" + self.kind, self.objects, field=self.field, params=self.params)
        for (s, t, p) in self.morphisms:
            C.add_morphism(t, s, p)
        for o, mid in enumerate(self.identity):
            s, t, p = self.morphisms[mid]
            C.set_identity(o, C.mid_of(t, s, p))
        base = self

        def comp(gp, fp):
            # (g o_op f) corresponds to f o g in the base category
            return base.compose_payload(fp, gp)

        C.compose_payload = comp
        if self.generators is not None:
            C.generators = [C.mid_of(t, s, p)
                            for (s, t, p) in (self.morphisms[m] for m in self.generators)]
        return C.finish()

    def product(self, other):
        C = FinCat(f"prod:{self.kind}*{other.kind}",
                   [(a, b) for a in self.objects for b in other.objects],
                   field=self.field)
        nb = other.n_objects()

        def oid(a, b):
            return a * nb + b

        for (s1, t1, p1) in self.morphisms:
            for (s2, t2, p2) in other.morphisms:
                C.add_morphism(oid(s1, s2), oid(t1, t2), (p1, p2))
        for a in range(self.n_objects()):
            for b in range(nb):
                pa = self.payload(self.identity[a])
                pb = other.payload(other.identity[b])
                C.set_identity(oid(a, b), C.mid_of(oid(a, b), oid(a, b), (pa, pb)))
        ca, cb = self.compose_payload, other.compose_payload
        C.compose_payload = lambda gp, fp: (ca(gp[0], fp[0]), cb(gp[1], fp[1]))
        if self.generators is not None and other.generators is not None:
            gens = []
            for m in self.generators:
                s, t, p = self.morphisms[m]
                for b in range(nb):
                    pb = other.payload(other.identity[b])
                    gens.append(C.mid_of(oid(s, b), oid(t, b), (p, pb)))
            for m in other.generators:
                s, t, p = other.morphisms[m]
                for a in range(self.n_objects()):
                    pa = self.payload(self.identity[a])
                    gens.append(C.mid_of(oid(a, s), oid(a, t), (pa, p)))
            C.generators = sorted(set(gens))
        return C.finish()

    # -- validation -----------------------------------------------------------

    def validate(self, max_pairs=2_000_000):
        """Identity laws, closure, and associativity (associativity only when
        the number of composable pairs stays under max_pairs)."""
        for o, mid in enumerate(self.identity):
            assert mid is not None, f"object {o} has no identity"
            s, t, _ = self.morphisms[mid]
            assert s == o and t == o
        for mid in range(self.n_morphisms()):
            s, t, _ = self.morphisms[mid]
            assert self.compose(mid, self.identity[s]) == mid
            assert self.compose(self.identity[t], mid) == mid
        by_src = {}
        for mid in range(self.n_morphisms()):
            by_src.setdefault(self.src(mid), []).append(mid)
        pairs = []
        for f in range(self.n_morphisms()):
            for g in by_src.get(self.tgt(f), []):
                pairs.append((g, f))
                self.compose(g, f)  # closure
        count = 0
        for (g, f) in pairs:
            for h in by_src.get(self.tgt(g), []):
                assert self.compose(h, self.compose(g, f)) == \
                    self.compose(self.compose(h, g), f)
                count += 1
                if count > max_pairs:
                    return True
        return True

    def descriptor(self):
        """Serializable description (payload data only, no callables)."""
        return {
            "kind": self.kind,
            "field": self.field.key if self.field else None,
            "params": self.params,
            "objects": self.objects,
            "morphisms": self.morphisms,
            "identity": self.identity,
            "generators": self.generators,
            "mono": self.mono,
            "pullbacks": self.pullbacks,
        }

    @property
    def key(self):
        """Stable cache key."""
        import hashlib
        import json
        blob = json.dumps(
            [self.kind, self.field.key if self.field else None,
             sorted(self.params.items()), len(self.objects), len(self.morphisms)],
            default=str, sort_keys=True)
        h = hashlib.sha256(blob.encode()).hexdigest()[:16]
        return f"{self.kind}-{h}"

    def __repr__(self):
        return f"FinCat({self.kind}: {self.n_objects()} objects, {self.n_morphisms()} morphisms)"


class MonFunctor:
    """A functor between finite categories given by explicit object/morphism maps."""

    def __init__(self, source: FinCat, target: FinCat, obj_map, mor_map):
        self.source = source
        self.target = target
        self.obj_map = list(obj_map)
        self.mor_map = dict(mor_map)

    def on_obj(self, o):
        return self.obj_map[o]

    def on_mor(self, m):
        return self.mor_map[m]

    def validate(self):
        S, T = self.source, self.target
        for o in range(S.n_objects()):
            assert self.on_mor(S.identity[o]) == T.identity[self.on_obj(o)]
        for m in range(S.n_morphisms()):
            fm = self.on_mor(m)
            assert T.src(fm) == self.on_obj(S.src(m))
            assert T.tgt(fm) == self.on_obj(S.tgt(m))
        for f in range(S.n_morphisms()):
            for g in range(S.n_morphisms()):
                if S.src(g) == S.tgt(f):
                    assert self.on_mor(S.compose(g, f)) == \
                        T.compose(self.on_mor(g), self.on_mor(f))
        return True
