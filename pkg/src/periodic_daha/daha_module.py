"""The calibrated DAHA module spanned by standard tableaux of a periodic skew shape.

Basis vectors ``v_T`` are indexed by the value tuple of a standard tableau
``T``.  With ``tau_i = C_T(i) - C_T(i+1)`` the generators act by

    x_i v_T = q^{C_T(i)} v_T            xi v_T = q^kappa v_T
    pi v_T  = v_{pi T}
    t_i v_T = (1 - q^{1+tau})/(1 - q^tau) v_{s_i T} - (1 - q)/(1 - q^tau) v_T

where the first term of ``t_i`` is dropped if ``s_i T`` is not standard.
All scalars are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from .affine_weyl import AffinePermutation, IntegralWeight, act_weight, elements_up_to_length
from .diagrams import ShapePair, require_strict
from .exceptions import IndexOutOfRange, InternalInvariant, InvalidInput, InvalidParameter
from .tableaux import ContentFunction, PeriodicTableau, content, enumerate_standard, is_standard, row_reading

__all__ = [
    "CheckResult",
    "DAHAModule",
    "Generator",
    "ModuleVector",
    "WitnessEntry",
    "WitnessReport",
    "irreducibility_witness",
    "parse_q",
    "presentation",
    "verify_defining_relations",
    "verify_intertwiners",
    "weight_decomposition_check",
]

Key = tuple[int, ...]
Scalar = Fraction


def parse_q(q: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"num/den"`` (or an int / Fraction) and reject ``0`` and ``+-1``."""
    try:
        value = Fraction(q)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidParameter(f"cannot parse q={q!r} as a rational") from exc
    if value in (0, 1, -1):
        raise InvalidParameter(f"q={value} is 0 or a root of unity")
    return value


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class Generator(NamedTuple):
    """One DAHA generator: ``name`` in ``{"t", "x", "pi", "xi"}`` with optional index."""

    name: str
    index: Optional[int]
    inverse: bool

    def __str__(self) -> str:
        idx = "" if self.index is None else str(self.index)
        return f"{self.name}{idx}{'^-1' if self.inverse else ''}"


_GEN_RE = re.compile(r"^(t|x|pi|xi)(\d*)(\^-1)?$")


def parse_generator(token: Union[str, Generator]) -> Generator:
    if isinstance(token, Generator):
        return token
    match = _GEN_RE.match(token.strip())
    if not match:
        raise InvalidInput(f"unknown generator {token!r}")
    name, idx, inv = match.groups()
    if name in ("t", "x") and not idx:
        raise InvalidInput(f"generator {token!r} needs an index")
    if name in ("pi", "xi") and idx:
        raise InvalidInput(f"generator {token!r} takes no index")
    return Generator(name, int(idx) if idx else None, bool(inv))


@dataclass(frozen=True, eq=False)
class ModuleVector:
    """A finitely supported combination ``sum c_T v_T``; zero coefficients are never stored."""

    shape: ShapePair
    q: Fraction
    terms: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: c for k, c in self.terms.items() if c != 0})

    def _same_space(self, other: ModuleVector) -> None:
        if self.shape != other.shape or self.q != other.q:
            raise InvalidInput("vectors live in different modules")

    def __add__(self, other: ModuleVector) -> ModuleVector:
        self._same_space(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ModuleVector(self.shape, self.q, out)

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        return self + (-1) * other

    def __rmul__(self, scalar) -> ModuleVector:
        scalar = Fraction(scalar)
        return ModuleVector(self.shape, self.q, {k: scalar * c for k, c in self.terms.items()})

    def __neg__(self) -> ModuleVector:
        return (-1) * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.shape == other.shape and self.q == other.q and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, key: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    @property
    def support(self) -> list[Key]:
        return sorted(self.terms)

    def to_dict(self) -> dict:
        return {
            "shape": self.shape.to_dict(),
            "q": format_fraction(self.q),
            "terms": [{"values": list(k), "coeff": format_fraction(self.terms[k])}
                      for k in self.support],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ModuleVector:
        try:
            shape = ShapePair.from_dict(data["shape"])
            q = parse_q(data["q"])
            terms = {}
            for term in data["terms"]:
                key = tuple(int(x) for x in term["values"])
                terms[key] = terms.get(key, 0) + Fraction(term["coeff"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad vector JSON: {exc}") from exc
        vec = cls(shape, q, terms)
        for key in vec.terms:
            if not is_standard(PeriodicTableau(shape, key)):
                raise InvalidInput(f"{key} is not a standard tableau on the shape")
        return vec

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*v{k}" for k, c in sorted(self.terms.items())) or "0"
        return f"ModuleVector[{body}]"


class DAHAModule:
    """Exact action of the double affine Hecke algebra on ``V(lambda, mu)``.

    Per-basis-vector results are memoized, so a module object is cheap to
    reuse across many verification calls.
    """

    def __init__(self, shape: ShapePair, q):
        require_strict(shape)
        self.shape = shape
        self.q = parse_q(q)
        self.n = shape.n
        self.kappa = shape.kappa
        self._powers: dict[int, Fraction] = {}
        self._contents: dict[Key, ContentFunction] = {}
        self._standard: dict[Key, bool] = {}
        self._actions: dict[tuple[Generator, Key], tuple[tuple[Key, Fraction], ...]] = {}

    # -- scalars and combinatorial caches ---------------------------------

    def qpow(self, k: int) -> Fraction:
        try:
            return self._powers[k]
        except KeyError:
            value = self.q ** k
            self._powers[k] = value
            return value

    def content_of(self, key: Key) -> ContentFunction:
        try:
            return self._contents[key]
        except KeyError:
            c = content(PeriodicTableau(self.shape, key))
            self._contents[key] = c
            return c

    def is_standard_key(self, key: Key) -> bool:
        try:
            return self._standard[key]
        except KeyError:
            ok = is_standard(PeriodicTableau(self.shape, key))
            self._standard[key] = ok
            return ok

    def tau(self, key: Key, i: int) -> int:
        c = self.content_of(key)
        return c(i) - c(i + 1)

    def weight_of(self, key: Key) -> IntegralWeight:
        c = self.content_of(key)
        return IntegralWeight(self.n, c.values, self.kappa)

    def shifted_key(self, w: AffinePermutation, key: Key) -> Key:
        return tuple(w(v) for v in key)

    # -- vectors ------------------------------------------------------------

    def zero(self) -> ModuleVector:
        return ModuleVector(self.shape, self.q, {})

    def basis(self, key: Union[Sequence[int], PeriodicTableau]) -> ModuleVector:
        if isinstance(key, PeriodicTableau):
            key = key.values
        key = tuple(key)
        if not self.is_standard_key(key):
            raise InvalidInput(f"{key} is not a standard tableau")
        return ModuleVector(self.shape, self.q, {key: Fraction(1)})

    def _combine(self, pairs: Iterable[tuple[Key, Fraction]]) -> ModuleVector:
        out: dict[Key, Fraction] = {}
        for k, c in pairs:
            out[k] = out.get(k, 0) + c
        return ModuleVector(self.shape, self.q, out)

    # -- generators -----------------------------------------------------------

    def _check_index(self, g: Generator) -> None:
        if g.name == "t" and not 0 <= g.index < self.n:
            raise IndexOutOfRange(f"t_{g.index} undefined for n={self.n}")
        if g.name == "x" and not 1 <= g.index <= self.n:
            raise IndexOutOfRange(f"x_{g.index} undefined for n={self.n}")

    def _t_terms(self, i: int, key: Key) -> list[tuple[Key, Fraction]]:
        tau = self.tau(key, i)
        if tau == 0:
            raise InternalInvariant(f"tau_{i} vanishes on standard tableau {key}")
        q = self.q
        denom = 1 - self.qpow(tau)
        terms = [(key, -(1 - q) / denom)]
        swapped = self.shifted_key(AffinePermutation.s(self.n, i), key)
        if self.is_standard_key(swapped):
            terms.append((swapped, (1 - self.qpow(1 + tau)) / denom))
        return terms

    def _basis_action(self, g: Generator, key: Key) -> tuple[tuple[Key, Fraction], ...]:
        cached = self._actions.get((g, key))
        if cached is not None:
            return cached
        sign = -1 if g.inverse else 1
        if g.name == "x":
            result = [(key, self.qpow(sign * self.content_of(key)(g.index)))]
        elif g.name == "xi":
            result = [(key, self.qpow(sign * self.kappa))]
        elif g.name == "pi":
            result = [(self.shifted_key(AffinePermutation.pi(self.n, sign), key), Fraction(1))]
        elif not g.inverse:
            result = self._t_terms(g.index, key)
        else:
            # t^-1 = q^-1 (t + (1 - q)) from the quadratic relation
            qinv = 1 / self.q
            result = [(k, qinv * c) for k, c in self._t_terms(g.index, key)]
            result.append((key, qinv * (1 - self.q)))
        result = tuple(result)
        self._actions[(g, key)] = result
        return result

    def act_generator(self, g: Union[str, Generator], v: ModuleVector) -> ModuleVector:
        g = parse_generator(g)
        self._check_index(g)
        return self._combine(
            (k2, c * c2) for k, c in v.terms.items() for k2, c2 in self._basis_action(g, k)
        )

    def act_word(self, word: Sequence[Union[str, Generator]], v: ModuleVector) -> ModuleVector:
        """Apply ``word[0] word[1] ... word[-1]`` to ``v`` (rightmost letter first)."""
        gens = [parse_generator(g) for g in word]
        for g in gens:
            self._check_index(g)
        for g in reversed(gens):
            v = self.act_generator(g, v)
        return v

    # -- intertwiners -----------------------------------------------------------

    def x_alpha_word(self, i: int, inverse: bool = False) -> list[str]:
        """Generator word for ``x^{alpha_i}``; ``alpha_0 = eps_n - eps_1 + delta``."""
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"alpha_{i} undefined for n={self.n}")
        inv = "^-1"
        if i == 0:
            word = [f"x{self.n}", f"x1{inv}", "xi"]
        else:
            word = [f"x{i}", f"x{i + 1}{inv}"]
        if inverse:
            word = [g[:-3] if g.endswith(inv) else g + inv for g in word]
        return word

    def act_phi(self, i: int, v: ModuleVector) -> ModuleVector:
        """``phi_i = t_i (1 - x^{alpha_i}) + 1 - q``, evaluated through the generators."""
        inner = v - self.act_word(self.x_alpha_word(i), v)
        return self.act_generator(Generator("t", i, False), inner) + (1 - self.q) * v

    def phi_closed_form(self, i: int, v: ModuleVector) -> ModuleVector:
        """``phi_i v_T = (1 - q^{1+tau_i}) v_{s_i T}``, or 0 when ``s_i T`` is not standard."""
        s = AffinePermutation.s(self.n, i)
        pairs = []
        for key, c in v.terms.items():
            swapped = self.shifted_key(s, key)
            if self.is_standard_key(swapped):
                pairs.append((swapped, c * (1 - self.qpow(1 + self.tau(key, i)))))
        return self._combine(pairs)

    def act_phi_w(self, w: AffinePermutation, v: ModuleVector, prefer: str = "min") -> ModuleVector:
        """``phi_w = pi^r phi_{i1} ... phi_{ik}`` along a reduced word of ``w``."""
        word = w.reduced_word(prefer)
        for i in reversed(word.letters):
            v = self.act_phi(i, v)
        if word.r:
            name = "pi" if word.r > 0 else "pi^-1"
            for _ in range(abs(word.r)):
                v = self.act_generator(name, v)
        return v


# -- presentation -------------------------------------------------------------

Side = tuple[tuple[Fraction, tuple[str, ...]], ...]


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: Side
    rhs: Side


def _adjacent(i: int, j: int, n: int) -> bool:
    return (i - j) % n in (1, n - 1)


def presentation(n: int, q: Fraction) -> list[Relation]:
    """Every defining relation of the algebra, instantiated for rank ``n``.

    For ``n == 2`` the braid and commutation relations among the ``t_i`` are
    omitted, matching the rank-two presentation.
    """
    one = Fraction(1)
    rels: list[Relation] = []

    def rel(label, lhs, rhs):
        rels.append(Relation(label, tuple((Fraction(c), tuple(w)) for c, w in lhs),
                             tuple((Fraction(c), tuple(w)) for c, w in rhs)))

    gens = [f"t{i}" for i in range(n)] + ["pi", "pi^-1"] + \
        [f"x{i}" for i in range(1, n + 1)] + [f"x{i}^-1" for i in range(1, n + 1)]

    for i in range(n):
        rel(f"(t{i} - q)(t{i} + 1) = 0",
            [(one, [f"t{i}", f"t{i}"])], [(q - 1, [f"t{i}"]), (q, [])])
        rel(f"t{i} t{i}^-1 = 1", [(one, [f"t{i}", f"t{i}^-1"])], [(one, [])])
        rel(f"t{i}^-1 t{i} = 1", [(one, [f"t{i}^-1", f"t{i}"])], [(one, [])])
    if n >= 3:
        for i in range(n):
            for j in range(i + 1, n):
                if _adjacent(i, j, n):
                    rel(f"t{i} t{j} t{i} = t{j} t{i} t{j}",
                        [(one, [f"t{i}", f"t{j}", f"t{i}"])], [(one, [f"t{j}", f"t{i}", f"t{j}"])])
                else:
                    rel(f"t{i} t{j} = t{j} t{i}",
                        [(one, [f"t{i}", f"t{j}"])], [(one, [f"t{j}", f"t{i}"])])
    rel("pi pi^-1 = 1", [(one, ["pi", "pi^-1"])], [(one, [])])
    rel("pi^-1 pi = 1", [(one, ["pi^-1", "pi"])], [(one, [])])
    for i in range(n):
        j = (i + 1) % n
        rel(f"pi t{i} pi^-1 = t{j}", [(one, ["pi", f"t{i}", "pi^-1"])], [(one, [f"t{j}"])])
    for i in range(1, n + 1):
        rel(f"x{i} x{i}^-1 = 1", [(one, [f"x{i}", f"x{i}^-1"])], [(one, [])])
        rel(f"x{i}^-1 x{i} = 1", [(one, [f"x{i}^-1", f"x{i}"])], [(one, [])])
        for j in range(i + 1, n + 1):
            rel(f"x{i} x{j} = x{j} x{i}", [(one, [f"x{i}", f"x{j}"])], [(one, [f"x{j}", f"x{i}"])])
    for i in range(1, n):
        rel(f"t{i} x{i} t{i} = q x{i + 1}",
            [(one, [f"t{i}", f"x{i}", f"t{i}"])], [(q, [f"x{i + 1}"])])
    rel(f"t0 x{n} t0 = xi^-1 q x1", [(one, ["t0", f"x{n}", "t0"])], [(q, ["xi^-1", "x1"])])
    for i in range(n):
        for j in range(1, n + 1):
            if j % n not in (i % n, (i + 1) % n):
                rel(f"t{i} x{j} = x{j} t{i}", [(one, [f"t{i}", f"x{j}"])], [(one, [f"x{j}", f"t{i}"])])
    for i in range(1, n):
        rel(f"pi x{i} pi^-1 = x{i + 1}", [(one, ["pi", f"x{i}", "pi^-1"])], [(one, [f"x{i + 1}"])])
    rel(f"pi x{n} pi^-1 = xi^-1 x1", [(one, ["pi", f"x{n}", "pi^-1"])], [(one, ["xi^-1", "x1"])])
    rel("xi xi^-1 = 1", [(one, ["xi", "xi^-1"])], [(one, [])])
    rel("xi^-1 xi = 1", [(one, ["xi^-1", "xi"])], [(one, [])])
    for g in gens:
        for c in ("xi", "xi^-1"):
            rel(f"{c} {g} = {g} {c}", [(one, [c, g])], [(one, [g, c])])
    return rels


# -- verification -------------------------------------------------------------


@dataclass
class CheckResult:
    relation: str
    status: str
    counterexample: Optional[ModuleVector] = None
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "status": self.status,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "checked": self.checked,
        }


class _Tally:
    """Accumulates per-check outcomes, keeping the first counterexample in input order."""

    def __init__(self):
        self.results: dict[str, CheckResult] = {}

    def record(self, label: str, ok: bool, witness: ModuleVector) -> None:
        res = self.results.setdefault(label, CheckResult(label, "pass"))
        res.checked += 1
        if not ok and res.passed:
            res.status = "fail"
            res.counterexample = witness

    def merge(self, other: _Tally) -> None:
        for label, res in other.results.items():
            mine = self.results.setdefault(label, CheckResult(label, "pass"))
            mine.checked += res.checked
            if not res.passed and mine.passed:
                mine.status, mine.counterexample = "fail", res.counterexample

    def report(self) -> list[CheckResult]:
        return list(self.results.values())


def _side(module: DAHAModule, side: Side, v: ModuleVector) -> ModuleVector:
    out = module.zero()
    for coeff, word in side:
        out = out + coeff * module.act_word(word, v)
    return out


def _relations_chunk(module: DAHAModule, keys: Sequence[Key]) -> _Tally:
    tally = _Tally()
    rels = presentation(module.n, module.q)
    for key in keys:
        v = module.basis(key)
        for rel in rels:
            tally.record(rel.label, _side(module, rel.lhs, v) == _side(module, rel.rhs, v), v)
    return tally


def _intertwiners_chunk(module: DAHAModule, keys: Sequence[Key], product_length: int) -> _Tally:
    tally = _Tally()
    n, q = module.n, module.q
    small = [w for w in elements_up_to_length(n, product_length) if not w.is_identity]
    for key in keys:
        v = module.basis(key)
        zeta = module.weight_of(key)
        phis = {i: module.act_phi(i, v) for i in range(n)}
        for i in range(n):
            tau = module.tau(key, i)
            tally.record(f"phi{i} = closed form", phis[i] == module.phi_closed_form(i, v), v)
            sq = module.act_phi(i, phis[i])
            xa = module.act_word(module.x_alpha_word(i), v)
            xb = module.act_word(module.x_alpha_word(i, inverse=True), v)
            rhs = v - q * xa - q * xb + (q * q) * v
            tally.record(f"phi{i}^2 = (1 - q x^a{i})(1 - q x^-a{i})", sq == rhs, v)
            eig = (1 - module.qpow(1 + tau)) * (1 - module.qpow(1 - tau))
            tally.record(f"phi{i}^2 eigenvalue (1-q^(1+tau))(1-q^(1-tau))", sq == eig * v, v)
            # phi_i v lies in the weight space of s_i(zeta)
            target = act_weight(AffinePermutation.s(n, i), zeta)
            ok = all(module.act_generator(f"x{k}", phis[i]) == module.qpow(target.value(k)) * phis[i]
                     for k in range(1, n + 1))
            ok = ok and module.act_generator("xi", phis[i]) == module.qpow(module.kappa) * phis[i]
            tally.record(f"phi{i} maps weight zeta to s{i}(zeta)", ok, v)
            if n >= 3:
                for j in range(i + 1, n):
                    if _adjacent(i, j, n):
                        lhs = module.act_phi(i, module.act_phi(j, phis[i]))
                        rhs = module.act_phi(j, module.act_phi(i, phis[j]))
                        tally.record(f"phi{i} phi{j} phi{i} = phi{j} phi{i} phi{j}", lhs == rhs, v)
                    else:
                        lhs = module.act_phi(i, phis[j])
                        rhs = module.act_phi(j, phis[i])
                        tally.record(f"phi{i} phi{j} = phi{j} phi{i}", lhs == rhs, v)
        for w in small:
            there = module.act_phi_w(w, v)
            back = module.act_phi_w(w.inverse(), there)
            scalar = Fraction(1)
            for a, b in w.inversion_set():
                pair = zeta.pairing(a, b)
                scalar *= (1 - module.qpow(1 + pair)) * (1 - module.qpow(1 - pair))
            tally.record("phi_{w^-1} phi_w = prod (1-q^(1+<z,a>))(1-q^(1-<z,a>))",
                         back == scalar * v, v)
            tally.record("phi_w independent of reduced word",
                         there == module.act_phi_w(w, v, prefer="max"), v)
    return tally


def _weights_chunk(module: DAHAModule, keys: Sequence[Key]) -> _Tally:
    tally = _Tally()
    n = module.n
    for key in keys:
        v = module.basis(key)
        c = module.content_of(key)
        for i in range(1, n + 1):
            tally.record("x_i v_T = q^C_T(i) v_T",
                         module.act_generator(f"x{i}", v) == module.qpow(c(i)) * v, v)
            tally.record("x_i^-1 v_T = q^-C_T(i) v_T",
                         module.act_generator(f"x{i}^-1", v) == module.qpow(-c(i)) * v, v)
        tally.record("xi v_T = q^kappa v_T",
                     module.act_generator("xi", v) == module.qpow(module.kappa) * v, v)
    return tally


def _run_chunk(args):
    suite, shape, q, keys, extra = args
    module = DAHAModule(shape, q)
    if suite == "relations":
        return _relations_chunk(module, keys)
    if suite == "intertwiners":
        return _intertwiners_chunk(module, keys, extra)
    return _weights_chunk(module, keys)


def _dispatch(suite, shape, q, keys, workers, extra=None, module=None) -> _Tally:
    if module is not None or workers <= 1 or len(keys) < 2:
        module = module or DAHAModule(shape, q)
        if suite == "relations":
            return _relations_chunk(module, keys)
        if suite == "intertwiners":
            return _intertwiners_chunk(module, keys, extra)
        return _weights_chunk(module, keys)
    size = -(-len(keys) // workers)
    chunks = [(suite, shape, q, keys[i:i + size], extra) for i in range(0, len(keys), size)]
    tally = _Tally()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_chunk, chunks):
            tally.merge(part)
    return tally


def _basis_keys(shape: ShapePair, max_length: int, r_range: Optional[int]) -> list[Key]:
    return [t.values for t, _ in enumerate_standard(shape, max_length, r_range)]


def verify_defining_relations(
    shape: ShapePair,
    q,
    max_length: int,
    *,
    r_range: Optional[int] = None,
    workers: int = 1,
    module: Optional[DAHAModule] = None,
) -> list[CheckResult]:
    """Apply both sides of every defining relation to each enumerated basis vector."""
    q = parse_q(q)
    keys = _basis_keys(shape, max_length, r_range)
    return _dispatch("relations", shape, q, keys, workers, module=module).report()


def verify_intertwiners(
    shape: ShapePair,
    q,
    max_length: int,
    *,
    r_range: Optional[int] = None,
    product_length: int = 2,
    workers: int = 1,
    module: Optional[DAHAModule] = None,
) -> list[CheckResult]:
    """Braid, commutation and square identities of ``phi_i``, weight mapping,
    and the ``phi_{w^-1} phi_w`` product formula for ``l(w) <= product_length``."""
    q = parse_q(q)
    keys = _basis_keys(shape, max_length, r_range)
    return _dispatch("intertwiners", shape, q, keys, workers, product_length, module).report()


def weight_decomposition_check(
    shape: ShapePair,
    max_length: int,
    q=2,
    *,
    r_range: Optional[int] = None,
    workers: int = 1,
) -> list[CheckResult]:
    """Each ``v_T`` is a simultaneous eigenvector with a weight no other ``v_S`` shares."""
    q = parse_q(q)
    keys = _basis_keys(shape, max_length, r_range)
    results = _dispatch("weights", shape, q, keys, workers).report()

    module = DAHAModule(shape, q)
    seen: dict[tuple[int, ...], Key] = {}
    clash = None
    for key in keys:
        zeta = module.content_of(key).values
        if zeta in seen and clash is None:
            clash = key
        seen.setdefault(zeta, key)
    # weight spaces are one-dimensional exactly when the weight map is injective
    for label in ("weight map T -> zeta_T injective", "weight spaces one-dimensional"):
        results.append(CheckResult(label, "pass" if clash is None else "fail",
                                   None if clash is None else module.basis(clash), len(keys)))
    return results


@dataclass
class WitnessEntry:
    w: AffinePermutation
    tableau: Key
    scalar: Fraction
    status: str

    def to_dict(self) -> dict:
        return {"w": self.w.to_dict(), "values": list(self.tableau),
                "scalar": format_fraction(self.scalar), "status": self.status}


@dataclass
class WitnessReport:
    entries: list[WitnessEntry]

    @property
    def passed(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    @property
    def failures(self) -> list[WitnessEntry]:
        return [e for e in self.entries if e.status != "pass"]

    def as_check(self) -> CheckResult:
        bad = self.failures
        return CheckResult("phi_w v_T0 = c_w v_{wT0}, c_w != 0",
                           "pass" if not bad else "fail", None, len(self.entries))


def irreducibility_witness(
    shape: ShapePair, q, max_length: int, *, r_range: Optional[int] = None
) -> WitnessReport:
    """Check ``phi_w v_T0 = prod_{a in R(w)} (1 - q^{1+<zeta_T0, a>}) v_{wT0}`` with nonzero scalar.

    Entries failing the identity are marked ``"off-diagonal"``; a vanishing
    scalar is marked ``"vanishing"``.
    """
    module = DAHAModule(shape, q)
    t0 = row_reading(shape)
    v0 = module.basis(t0)
    zeta = module.weight_of(t0.values)
    entries = []
    for t, w in enumerate_standard(shape, max_length, r_range):
        scalar = Fraction(1)
        for a, b in w.inversion_set():
            scalar *= 1 - module.qpow(1 + zeta.pairing(a, b))
        image = module.act_phi_w(w, v0)
        if scalar == 0 or not image:
            status = "vanishing"
        elif image != scalar * module.basis(t):
            status = "off-diagonal"
        else:
            status = "pass"
        entries.append(WitnessEntry(w, t.values, scalar, status))
    return WitnessReport(entries)
