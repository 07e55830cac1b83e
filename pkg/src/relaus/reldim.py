"""Minimal add(Q)-approximations and relative (co)dominant dimensions.

``Q``-dominant dimension of ``M`` counts how many successive minimal left
``add(Q)``-approximations, applied to ``M`` and then to the cokernels, are
monomorphisms.  Every exact sequence produced this way stays exact after
applying ``Hom_A(-, Q)`` because each map is an approximation.
"""
from __future__ import annotations

from contextlib import contextmanager

from . import homology as hm
from . import linalg as la
from . import modules as md
from .modules import Module, ModuleMap
from .values import INF, AtLeast, vadd, vmin

DEFAULT_CAP = 64


class AddCategory:
    """``add(Q)`` for a module ``Q``, through its basic indecomposable summands."""

    def __init__(self, Q: Module, seed: int = 0):
        self.Q = Q
        dec = md.decompose(Q, seed)
        self.summands = []
        self.end_radicals = []
        for c in dec.classes:
            s = dec.summands[c[0]]
            self.summands.append(s.module)
            rad = s.end_radical
            if rad is None:
                rad = md.local_endomorphisms(s.module) or []
            self.end_radicals.append(rad)
        self.basic = md.direct_sum_module(self.summands, algebra=Q.algebra, name=Q.name)
        self._homs = {}

    def __len__(self):
        return len(self.summands)

    def hom_between(self, k: int, l: int):
        key = (k, l)
        if key not in self._homs:
            self._homs[key] = md.hom_space(self.summands[k], self.summands[l])
        return self._homs[key]

    def radical_maps(self, k: int, l: int):
        """A spanning set of ``rad(Q_k, Q_l)``."""
        if k == l:
            return self.end_radicals[k]
        return self.hom_between(k, l)

    def contains(self, X: Module) -> bool:
        return md.in_add(X, self.basic)

    def sum_module(self, mult):
        mods = []
        for k, m in enumerate(mult):
            mods.extend([self.summands[k]] * m)
        return md.direct_sum(mods, algebra=self.Q.algebra)

    # approximations ---------------------------------------------------------
    def left_approximation(self, M: Module):
        """Minimal left ``add(Q)``-approximation ``M -> Q'``.

        For each summand ``Q_k`` the components are a basis of
        ``Hom(M, Q_k)`` modulo the maps that factor through a radical map
        ``Q_l -> Q_k``.  Returns ``(map, multiplicities, components)``.
        """
        F = M.field
        comps = []
        mult = []
        for k, Qk in enumerate(self.summands):
            H = md.hom_space(M, Qk)
            if not H:
                mult.append(0)
                continue
            fact = []
            for l in range(len(self.summands)):
                Hl = H if l == k else md.hom_space(M, self.summands[l])
                for g in self.radical_maps(l, k):
                    for h in Hl:
                        c = g.compose(h)
                        if not c.is_zero():
                            fact.append(c)
            R = la.image(md.maps_matrix(fact, M, Qk)) if fact else None
            keep = la.extend_independent(R, md.maps_matrix(H, M, Qk))
            mult.append(len(keep))
            comps.extend((k, H[j]) for j in keep)
        S, incs, projs = self.sum_module(mult)
        f = md.zero_map(M, S)
        for (k, h), inc in zip(comps, incs):
            f = f + inc.compose(h)
        return f, mult, comps

    def right_approximation(self, M: Module):
        """Minimal right ``add(Q)``-approximation ``Q' -> M``."""
        comps = []
        mult = []
        for k, Qk in enumerate(self.summands):
            H = md.hom_space(Qk, M)
            if not H:
                mult.append(0)
                continue
            fact = []
            for l in range(len(self.summands)):
                Hl = H if l == k else md.hom_space(self.summands[l], M)
                for g in self.radical_maps(k, l):
                    for h in Hl:
                        c = h.compose(g)
                        if not c.is_zero():
                            fact.append(c)
            R = la.image(md.maps_matrix(fact, Qk, M)) if fact else None
            keep = la.extend_independent(R, md.maps_matrix(H, Qk, M))
            mult.append(len(keep))
            comps.extend((k, H[j]) for j in keep)
        S, incs, projs = self.sum_module(mult)
        f = md.zero_map(S, M)
        for (k, h), pr in zip(comps, projs):
            f = f + h.compose(pr)
        return f, mult, comps

    def is_left_approximation(self, f: ModuleMap) -> bool:
        """Every map ``M -> Q_k`` factors through ``f``."""
        M, T = f.source, f.target
        for Qk in self.summands:
            H = md.hom_space(M, Qk)
            if not H:
                continue
            through = [g.compose(f) for g in md.hom_space(T, Qk)]
            if not through:
                return False
            if la.solve_membership(md.maps_matrix(through, M, Qk), md.maps_matrix(H, M, Qk)) is None:
                return False
        return True

    def is_right_approximation(self, f: ModuleMap) -> bool:
        """Every map ``Q_k -> M`` factors through ``f``."""
        T, M = f.source, f.target
        for Qk in self.summands:
            H = md.hom_space(Qk, M)
            if not H:
                continue
            through = [f.compose(g) for g in md.hom_space(Qk, T)]
            if not through:
                return False
            if la.solve_membership(md.maps_matrix(through, Qk, M), md.maps_matrix(H, Qk, M)) is None:
                return False
        return True


_ADD_CACHE: dict = {}


def add_category(Q: Module, seed: int = 0) -> AddCategory:
    key = (Q.digest(), seed)
    if key not in _ADD_CACHE:
        _ADD_CACHE[key] = AddCategory(Q, seed)
    return _ADD_CACHE[key]


class ApproxStep:
    """One step ``X_{i-1} -> Q_i -> X_i`` (left) or ``X_i -> Q_i -> X_{i-1}`` (right)."""

    def __init__(self, approx: ModuleMap, multiplicities, next_module: Module, next_map: ModuleMap,
                 exact: bool):
        self.approx = approx
        self.multiplicities = multiplicities
        self.next_module = next_module   # cokernel (left) or kernel (right)
        self.next_map = next_map         # Q_i -> X_i (left) or X_i -> Q_i (right)
        self.exact = exact               # approximation injective (left) / surjective (right)


class ApproxSequence:
    """The iterated minimal approximations starting at a module.

    ``steps`` holds every computed step, including a final non-exact one
    when the value is finite.  ``value`` counts the exact steps.
    """

    def __init__(self, start: Module, addq: AddCategory, side: str, steps, value, certificate):
        self.start = start
        self.addq = addq
        self.side = side
        self.steps = steps
        self.value = value
        self.certificate = certificate

    @property
    def exact_steps(self) -> list[ApproxStep]:
        return [s for s in self.steps if s.exact]

    def term_multiplicities(self):
        return [s.multiplicities for s in self.exact_steps]

    def module_after(self, t: int) -> Module:
        """``X_t``: the cokernel (kernel) after ``t`` exact steps."""
        if t == 0:
            return self.start
        return self.exact_steps[t - 1].next_module

    def verify(self) -> bool:
        """Exactness and Hom-exactness, recomputed from Hom spaces and factorizations."""
        steps = self.exact_steps
        if not steps:
            return True
        Q = self.addq.basic
        F = self.start.field
        if self.side == "left":
            # complex M -> Q_1 -> Q_2 -> ... -> Q_n -> X_n
            objs = [self.start] + [s.approx.target for s in steps] + [steps[-1].next_module]
            maps = [steps[0].approx]
            for i in range(1, len(steps)):
                maps.append(steps[i].approx.compose(steps[i - 1].next_map))
            maps.append(steps[-1].next_map)
            if not maps[0].is_injective():
                raise ArithmeticError("first map is not injective")
            if not maps[-1].is_surjective():
                raise ArithmeticError("last map is not onto")
            for i in range(1, len(maps)):
                if not maps[i].compose(maps[i - 1]).is_zero():
                    raise ArithmeticError("not a complex")
                if md.Factorization(maps[i]).kernel.total_dim != maps[i - 1].rank():
                    raise ArithmeticError(f"not exact at term {i}")
            # Hom(-, Q): ... -> Hom(Q_2,Q) -> Hom(Q_1,Q) -> Hom(M,Q) -> 0
            homs = [md.hom_space(X, Q) for X in objs]
            coords = [md.HomCoordinates(h, X, Q) for h, X in zip(homs, objs)]

            def pull(i):
                # Hom(objs[i+1], Q) -> Hom(objs[i], Q), precomposition with maps[i]
                cols = [coords[i].coords(g.compose(maps[i])) for g in homs[i + 1]]
                if not cols or not homs[i]:
                    return 0
                return la.rank(F.from_rows(cols, len(homs[i])))

            ranks = [pull(i) for i in range(len(maps))]
            if ranks[0] != len(homs[0]):
                raise ArithmeticError("Hom(-,Q) is not onto Hom(M,Q)")
            for i in range(1, len(objs) - 1):
                # exactness at Hom(objs[i], Q)
                if len(homs[i]) - ranks[i - 1] != ranks[i]:
                    raise ArithmeticError(f"Hom(-,Q) not exact at term {i}")
            if len(homs[-1]) != ranks[-1]:
                raise ArithmeticError("Hom(-,Q) not injective on the last term")
        else:
            # complex X_n -> Q_n -> ... -> Q_1 -> M
            objs = [steps[-1].next_module] + [s.approx.source for s in reversed(steps)] + [self.start]
            maps = [steps[-1].next_map]
            for i in range(len(steps) - 1, 0, -1):
                maps.append(steps[i - 1].next_map.compose(steps[i].approx))
            maps.append(steps[0].approx)
            if not maps[0].is_injective():
                raise ArithmeticError("first map is not injective")
            if not maps[-1].is_surjective():
                raise ArithmeticError("last map is not onto")
            for i in range(1, len(maps)):
                if not maps[i].compose(maps[i - 1]).is_zero():
                    raise ArithmeticError("not a complex")
                if md.Factorization(maps[i]).kernel.total_dim != maps[i - 1].rank():
                    raise ArithmeticError(f"not exact at term {i}")
            homs = [md.hom_space(Q, X) for X in objs]
            coords = [md.HomCoordinates(h, Q, X) for h, X in zip(homs, objs)]

            def push(i):
                cols = [coords[i + 1].coords(maps[i].compose(g)) for g in homs[i]]
                if not cols or not homs[i + 1]:
                    return 0
                return la.rank(F.from_rows(cols, len(homs[i + 1])))

            ranks = [push(i) for i in range(len(maps))]
            if ranks[-1] != len(homs[-1]):
                raise ArithmeticError("Hom(Q,-) is not onto Hom(Q,M)")
            for i in range(1, len(objs) - 1):
                if len(homs[i]) - ranks[i] != ranks[i - 1]:
                    raise ArithmeticError(f"Hom(Q,-) not exact at term {i}")
            if len(homs[0]) != ranks[0]:
                raise ArithmeticError("Hom(Q,-) not injective on the first term")
        return True


_WITNESS_LOG: list | None = None


@contextmanager
def collect_witnesses():
    """Record every approximation sequence computed inside the block."""
    global _WITNESS_LOG
    prev = _WITNESS_LOG
    _WITNESS_LOG = []
    try:
        yield _WITNESS_LOG
    finally:
        _WITNESS_LOG = prev


def _log(seq):
    if _WITNESS_LOG is not None:
        _WITNESS_LOG.append(seq)


_DOM_CACHE: dict = {}


def relative_dominant_dimension(M: Module, Q: Module, cap: int = DEFAULT_CAP, seed: int = 0):
    """``Q``-dominant dimension of ``M``.

    Returns ``(value, ApproxSequence)``.  The value is ``INF`` only when a
    cokernel is zero or lies in ``add(Q)``; if ``cap`` steps are injective
    without that happening the value is ``AtLeast(cap)``.
    """
    key = (M.digest(), Q.digest(), cap, seed)
    hit = _DOM_CACHE.get(key)
    if hit is not None:
        _log(hit)
        return hit.value, hit
    addq = add_category(Q, seed)
    steps = []
    X = M
    value, cert = None, ""
    n = 0
    while True:
        if X.is_zero():
            value, cert = INF, f"cokernel {n} is zero"
            break
        if addq.contains(X):
            value, cert = INF, f"cokernel {n} lies in add(Q)"
            break
        if n >= cap:
            value, cert = AtLeast(cap), "cap reached"
            break
        f, mult, _ = addq.left_approximation(X)
        inj = f.is_injective()
        if not inj:
            steps.append(ApproxStep(f, mult, None, None, False))
            value, cert = n, f"approximation {n + 1} is not injective"
            break
        C, p = md.cokernel(f)
        steps.append(ApproxStep(f, mult, C, p, True))
        X = C
        n += 1
    seq = ApproxSequence(M, addq, "left", steps, value, cert)
    _DOM_CACHE[key] = seq
    _log(seq)
    return value, seq


def relative_codominant_dimension_direct(M: Module, Q: Module, cap: int = DEFAULT_CAP,
                                         seed: int = 0):
    """``Q``-codominant dimension through right approximations on ``A`` itself."""
    key = ("co", M.digest(), Q.digest(), cap, seed)
    hit = _DOM_CACHE.get(key)
    if hit is not None:
        _log(hit)
        return hit.value, hit
    addq = add_category(Q, seed)
    steps = []
    X = M
    value, cert = None, ""
    n = 0
    while True:
        if X.is_zero():
            value, cert = INF, f"kernel {n} is zero"
            break
        if addq.contains(X):
            value, cert = INF, f"kernel {n} lies in add(Q)"
            break
        if n >= cap:
            value, cert = AtLeast(cap), "cap reached"
            break
        f, mult, _ = addq.right_approximation(X)
        if not f.is_surjective():
            steps.append(ApproxStep(f, mult, None, None, False))
            value, cert = n, f"approximation {n + 1} is not onto"
            break
        K, i = md.kernel(f)
        steps.append(ApproxStep(f, mult, K, i, True))
        X = K
        n += 1
    seq = ApproxSequence(M, addq, "right", steps, value, cert)
    _DOM_CACHE[key] = seq
    _log(seq)
    return value, seq


def relative_codominant_dimension(M: Module, Q: Module, cap: int = DEFAULT_CAP, seed: int = 0,
                                  method: str = "duality"):
    """``Q``-codominant dimension of ``M``.

    ``method="duality"`` computes the ``DQ``-dominant dimension of ``DM``
    over the opposite algebra; ``method="direct"`` iterates right
    approximations.  Both return ``(value, witness)``.
    """
    if method == "direct":
        return relative_codominant_dimension_direct(M, Q, cap, seed)
    if method != "duality":
        raise ValueError(f"unknown method {method!r}")
    return relative_dominant_dimension(md.dualize(M), md.dualize(Q), cap, seed)


def dominant_dimension_of_sum(mods, Q: Module, cap: int = DEFAULT_CAP, seed: int = 0):
    """Minimum over the summands: the relative dominant dimension of a direct sum."""
    return vmin(*(relative_dominant_dimension(X, Q, cap, seed)[0] for X in mods))


def codominant_dimension_of_sum(mods, Q: Module, cap: int = DEFAULT_CAP, seed: int = 0):
    return vmin(*(relative_codominant_dimension(X, Q, cap, seed)[0] for X in mods))


def faithful_dimension(Q: Module, cap: int = DEFAULT_CAP, seed: int = 0):
    """``Q``-dominant dimension of the regular module, summand by summand."""
    A = Q.algebra
    vals = [relative_dominant_dimension(md.projective(A, i), Q, cap, seed)[0]
            for c in A.vertex_classes() for i in c[:1]]
    return vmin(*vals)


def check_additivity(seq: ApproxSequence, cap: int = DEFAULT_CAP, seed: int = 0):
    """Test ``value(M) = t + value(X_t)`` on the truncations of a left witness.

    Only truncations whose cokernel ``X_t`` has ``Ext^i(X_t, Q) = 0`` for
    ``1 <= i <= t`` are tested.  Returns a list of
    ``(t, applicable, holds)``.
    """
    if seq.side != "left":
        raise ValueError("additivity is stated for left witnesses")
    Q = seq.addq.Q
    out = []
    for t in range(1, len(seq.exact_steps) + 1):
        Xt = seq.module_after(t)
        if Xt.is_zero():
            ok = seq.value is INF
            out.append((t, True, ok))
            continue
        applicable = all(hm.ext_dim(Xt, Q, i) == 0 for i in range(1, t + 1))
        if not applicable:
            out.append((t, False, None))
            continue
        sub_cap = cap - t
        vt, _ = relative_dominant_dimension(Xt, Q, sub_cap, seed)
        out.append((t, True, vadd(t, vt) == seq.value))
    return out
