"""Witness sets with short covering tours.

For any element ``xi`` of F this module builds a finite ``xi``-related set
``S`` together with a closed path in the Cayley graph visiting all of
``S`` whose length is below ``lam * Card(S)``, and re-verifies every claim
about the result by direct multiplication of PL maps.

The construction rests on a pair ``(u, v)`` of elements with disjoint
supports separated by a dyadic point ``split``.  Conjugating ``u`` by a
suitable ``z = xi**eps`` keeps it supported on its own side of ``split``,
so ``w = z u z^-1`` still commutes with ``v``.  The set is then
``{v^p w^q} ∪ {v^p w^q z}`` for ``0 <= p, q <= n``, toured by a
two-plane serpentine.  When ``z`` lies in the abelian group ``<u, v>`` the
two layers collide and a boustrophedon over ``{u^p v^q}`` is used instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .dyadic import HALF, ONE, ZERO, Dyadic
from .generators import standard_generators
from .plmap import (
    IDENTITY,
    PLMap,
    agree_on,
    commutator,
    commute,
    is_identity_on,
    pl_compose,
    pl_evaluate,
    pl_invert,
    pl_power,
    pl_product,
    support,
)
from .words import Alphabet, GroupWord, pl_from_word, preset


class WitnessError(ValueError):
    """Invalid request: bad parameters or an unsupported (xi, lambda) combination."""


class SupportPairError(WitnessError):
    pass


class LemmaFailure(RuntimeError):
    """A conjugate failed to commute; the generator calibration must be wrong."""


class VerificationError(RuntimeError):
    pass


# --------------------------------------------------------------------------
# support pairs


@dataclass(frozen=True)
class SupportPair:
    """Two words whose maps are trivial on opposite sides of ``split``.

    ``u`` is the element that gets conjugated.  ``orientation`` is
    ``"upper"`` when ``u`` is supported above ``split`` (trivial on
    ``[0, split]``) and ``"lower"`` when it is supported below.
    """

    u_word: GroupWord
    v_word: GroupWord
    split: Dyadic = HALF

    @property
    def alphabet(self) -> Alphabet:
        return self.u_word.alphabet

    @property
    def u(self) -> PLMap:
        return pl_from_word(self.u_word)

    @property
    def v(self) -> PLMap:
        return pl_from_word(self.v_word)

    @property
    def weight(self) -> int:
        """``|u| + |v|``: the per-cell cost of the serpentine tour."""
        return len(self.u_word) + len(self.v_word)

    @property
    def constant(self) -> Fraction:
        """Asymptotic ratio of the generic tour, ``(|u| + |v|) / 2``."""
        return Fraction(self.weight, 2)

    @property
    def orientation(self) -> str:
        return validate_pair(self)


def validate_pair(pair: SupportPair) -> str:
    """Check the support invariants and return the orientation of ``u``."""
    if pair.v_word.alphabet is not pair.u_word.alphabet:
        raise SupportPairError("u and v must be words over the same alphabet")
    s = pair.split
    if not (ZERO < s < ONE):
        raise SupportPairError(f"split {s} must lie strictly inside (0, 1)")
    u, v = pair.u, pair.v
    lower, upper = (ZERO, s), (s, ONE)
    if is_identity_on(u, lower) and is_identity_on(v, upper):
        orientation = "upper"
    elif is_identity_on(u, upper) and is_identity_on(v, lower):
        orientation = "lower"
    else:
        raise SupportPairError(
            f"u = {pair.u_word} and v = {pair.v_word} are not separated at {s}: "
            f"supp(u) = {_fmt_support(u)}, supp(v) = {_fmt_support(v)}"
        )
    if u.is_identity() or v.is_identity():
        raise SupportPairError("u and v must both be non-trivial")
    if not commute(u, v):
        raise SupportPairError(f"u = {pair.u_word} and v = {pair.v_word} do not commute")
    return orientation


def _fmt_support(f: PLMap) -> str:
    return " ∪ ".join(f"({a}, {b})" for a, b in support(f)) or "∅"


def separating_point(u: PLMap, v: PLMap) -> Dyadic:
    """A dyadic point with the support of one map on each side, if there is one."""
    su, sv = support(u), support(v)
    if not su or not sv:
        raise SupportPairError("u and v must both be non-trivial")
    for lower, upper in ((su, sv), (sv, su)):
        lo_end, hi_start = lower[-1][1], upper[0][0]
        if lo_end <= hi_start:
            for cand in (lo_end, hi_start, (lo_end + hi_start) / 2):
                try:
                    point = Dyadic.from_fraction(cand)
                except ValueError:
                    continue
                if ZERO < point < ONE:
                    return point
    raise SupportPairError(
        f"supports overlap: supp(u) = {_fmt_support(u)}, supp(v) = {_fmt_support(v)}"
    )


def standard_pair() -> SupportPair:
    """``u = x1``, ``v = x0 x1 x0^-2`` over ``{x0, x1}``."""
    alpha = preset("std2")
    return SupportPair(GroupWord.parse("b", alpha), GroupWord.parse("abAA", alpha))


def remark_pairs() -> list[tuple[Alphabet, SupportPair, Fraction]]:
    """The pairs for the generating sets ``{x0, x1, x2}`` and ``{x0, x1, x1 x0^-1}``.

    In both, ``u = x1 x0^-1`` is supported on ``(0, 3/4)`` and ``v = x2`` on
    ``(3/4, 1)``, so they are split at 3/4 and used with the "lower"
    orientation.
    """
    out = []
    for name, u_text, v_text in (("x012", "bA", "c"), ("mirror3", "d", "Aba")):
        alpha = preset(name)
        u_word, v_word = GroupWord.parse(u_text, alpha), GroupWord.parse(v_text, alpha)
        split = separating_point(pl_from_word(u_word), pl_from_word(v_word))
        pair = SupportPair(u_word, v_word, split)
        validate_pair(pair)
        out.append((alpha, pair, pair.constant))
    return out


def pair_for_alphabet(alphabet: Alphabet, doc: Optional[dict] = None) -> SupportPair:
    """The support pair belonging to a preset, or the one declared in a definition file."""
    if doc is not None:
        try:
            u_text, v_text = doc["u"], doc["v"]
        except KeyError as exc:
            raise SupportPairError(f"alphabet file lacks {exc.args[0]!r}") from None
        u_word, v_word = GroupWord.parse(u_text, alphabet), GroupWord.parse(v_text, alphabet)
        if "split" in doc:
            split = Dyadic.parse(str(doc["split"]))
        else:
            split = separating_point(pl_from_word(u_word), pl_from_word(v_word))
        pair = SupportPair(u_word, v_word, split)
        validate_pair(pair)
        return pair
    if alphabet.name == "std2":
        return standard_pair()
    for alpha, pair, _ in remark_pairs():
        if alpha is alphabet:
            return pair
    raise SupportPairError(f"no support pair known for alphabet {alphabet.name}")


# --------------------------------------------------------------------------
# the conjugation lemma


def choose_epsilon(xi: PLMap, split: Dyadic = HALF, orientation: str = "upper") -> int:
    """Sign ``eps`` such that ``z = xi**eps`` maps the side of ``split`` where ``u`` is trivial into itself.

    For the upper orientation this means ``(split)z <= split``.
    """
    image = pl_evaluate(xi, split)
    if orientation == "upper":
        return -1 if image > split else 1
    if orientation == "lower":
        return -1 if image < split else 1
    raise ValueError(f"unknown orientation {orientation!r}")


@dataclass(frozen=True)
class LemmaWitness:
    xi: GroupWord
    epsilon: int
    z_word: GroupWord
    z: PLMap
    w: PLMap
    split: Dyadic
    orientation: str


def lemma1_witness(xi: GroupWord, pair: Optional[SupportPair] = None) -> LemmaWitness:
    """Choose ``eps``, form ``w = z u z^-1`` with ``z = xi**eps``, and check ``w`` commutes with ``v``."""
    pair = pair or standard_pair()
    orientation = validate_pair(pair)
    if xi.alphabet is not pair.alphabet:
        raise WitnessError(f"xi is over {xi.alphabet.name} but the pair is over {pair.alphabet.name}")
    split = pair.split
    xi_map = pl_from_word(xi)
    eps = choose_epsilon(xi_map, split, orientation)
    z_word = xi if eps == 1 else xi.inverse()
    z = xi_map if eps == 1 else pl_invert(xi_map)
    w = pl_product((z, pair.u, pl_invert(z)))

    image = pl_evaluate(z, split)
    if orientation == "upper":
        side, preserved = (ZERO, split), image <= split
    else:
        side, preserved = (split, ONE), image >= split
    if not preserved:
        raise LemmaFailure(f"z = {z_word} moves {split} to {image}, off the trivial side of u")
    if not is_identity_on(w, side):
        raise LemmaFailure(f"w = z u z^-1 is not trivial on [{side[0]}, {side[1]}] for xi = {xi}")
    if not commute(w, pair.v):
        raise LemmaFailure(f"w = z u z^-1 does not commute with v for xi = {xi}")
    return LemmaWitness(xi, eps, z_word, z, w, split, orientation)


def check_mixed_identity(g, x0: Optional[PLMap] = None, x1: Optional[PLMap] = None) -> bool:
    """``[[g x1 g^-1, v], [g^-1 x1 g, v]] == 1`` with ``v = x0 x1 x0^-2``.

    ``g`` may be a word or a PL map.  ``x0``/``x1`` override the calibrated
    generators (used to test that a broken realization is caught).
    """
    g = pl_from_word(g) if isinstance(g, GroupWord) else g
    if x0 is None or x1 is None:
        x0, x1 = standard_generators()
    v = pl_product((x0, x1, pl_invert(x0), pl_invert(x0)))
    gi = pl_invert(g)
    left = commutator(pl_product((g, x1, gi)), v)
    right = commutator(pl_product((gi, x1, g)), v)
    return commutator(left, right).is_identity()


# --------------------------------------------------------------------------
# the two-layer grid


@dataclass
class GridSet:
    n: int
    base: dict  # (p, q) -> v^p w^q
    shifted: dict  # (p, q) -> v^p w^q z
    elements: list  # deduplicated union, base first

    @property
    def N(self) -> int:
        return self.n + 1

    @property
    def card(self) -> int:
        return len(self.elements)

    @property
    def degenerate(self) -> bool:
        return self.card < 2 * self.N ** 2


def grid_words(lw: LemmaWitness, pair: SupportPair, n: int) -> dict[tuple[int, int, int], GroupWord]:
    """Words for the grid vertices: ``(i, j, 0) -> v^i w^j`` and ``(i, j, 1) -> v^i w^j z``."""
    w_word = lw.z_word + pair.u_word + lw.z_word.inverse()
    out = {}
    for i in range(n + 1):
        for j in range(n + 1):
            base = pair.v_word.power(i) + w_word.power(j)
            out[(i, j, 0)] = base
            out[(i, j, 1)] = base + lw.z_word
    return out


def _powers(f: PLMap, n: int) -> list[PLMap]:
    out = [IDENTITY]
    for _ in range(n):
        out.append(pl_compose(out[-1], f))
    return out


def build_grid_set(lw: LemmaWitness, pair: SupportPair, n: int) -> GridSet:
    """``S' = {v^p w^q : 0 <= p, q <= n}`` and ``S'' = S' z``, deduplicated."""
    if n < 2 or n % 2:
        raise WitnessError(f"n must be an even number >= 2, got {n}")
    vp, wq = _powers(pair.v, n), _powers(lw.w, n)
    base, shifted = {}, {}
    for p in range(n + 1):
        for q in range(n + 1):
            g = pl_compose(vp[p], wq[q])
            base[(p, q)] = g
            shifted[(p, q)] = pl_compose(g, lw.z)
    if len(set(base.values())) != (n + 1) ** 2:
        raise LemmaFailure("v^p w^q are not pairwise distinct; v and w cannot have disjoint supports")
    elements = list(dict.fromkeys([*base.values(), *shifted.values()]))
    return GridSet(n, base, shifted, elements)


# --------------------------------------------------------------------------
# tours


@dataclass
class TourPath:
    """A closed walk: expanded letters plus the conceptual grid moves they came from.

    Each move is ``(label, source, target)`` with labels ``v u z`` (upper
    case for inverses) and vertices ``(i, j, layer)``.
    """

    alphabet: Alphabet
    letters: tuple
    moves: list = field(default_factory=list)
    start: PLMap = IDENTITY

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def word(self) -> GroupWord:
        return GroupWord(self.alphabet, self.letters)

    def ascents(self) -> list[tuple[int, int]]:
        return [src[:2] for label, src, _ in self.moves if label == "z"]


def _serpentine_moves(n: int) -> list[tuple[str, tuple, tuple]]:
    moves = []
    pos = (0, 0, 0)

    def go(label, target):
        nonlocal pos
        moves.append((label, pos, target))
        pos = target

    # bottom plane: p_0 forward, p_1 backward, ..., p_n forward
    for j in range(n + 1):
        step = 1 if j % 2 == 0 else -1
        for _ in range(n):
            i = pos[0]
            go("v" if step > 0 else "V", (i + step, j, 0))
        if j < n:
            i = pos[0]
            go("z", (i, j, 1))
            go("u", (i, j + 1, 1))
            go("Z", (i, j + 1, 0))
    # top plane: q_n backward, q_{n-1} forward, ..., q_0 backward
    for i in range(n, -1, -1):
        j = pos[1]
        go("z", (i, j, 1))
        step = -1 if j == n else 1
        for _ in range(n):
            jj = pos[1]
            go("u" if step > 0 else "U", (i, jj + step, 1))
        go("Z", (i, pos[1], 0))
        if i > 0:
            go("V", (i - 1, pos[1], 0))
    return moves


def _expand(moves, pieces: dict[str, tuple]) -> tuple:
    out = []
    for label, _, _ in moves:
        out.extend(pieces[label])
    return tuple(out)


def _pieces(**words: GroupWord) -> dict[str, tuple]:
    pieces = {}
    for label, w in words.items():
        pieces[label] = w.letters
        pieces[label.upper()] = w.inverse().letters
    return pieces


def build_serpentine_path(n: int, u_word: GroupWord, v_word: GroupWord, z_word: GroupWord) -> TourPath:
    """The closed two-plane serpentine through all ``2 (n+1)^2`` grid vertices."""
    if n < 2 or n % 2:
        raise WitnessError(f"n must be an even number >= 2, got {n}")
    moves = _serpentine_moves(n)
    letters = _expand(moves, _pieces(u=u_word, v=v_word, z=z_word))
    return TourPath(u_word.alphabet, letters, moves)


def serpentine_length(n: int, weight: int, z_len: int) -> int:
    """``weight (N^2 - 1) + (4N - 2)|z|`` with ``N = n + 1``."""
    N = n + 1
    return weight * (N * N - 1) + (4 * N - 2) * z_len


def boustrophedon_length(n: int, u_len: int, v_len: int) -> int:
    """Letters in ``u^n v u^(1-n) v u^(n-1) ... v u^-n v^-n``; ``n^2 + 8n + 1`` for the standard pair."""
    return (n * n + 1) * u_len + 2 * n * v_len


def build_boustrophedon_path(n: int, u_word: GroupWord, v_word: GroupWord) -> TourPath:
    """Row-by-row closed walk through ``{u^p v^q : 0 <= p, q <= n}`` for odd ``n``."""
    if n < 1 or n % 2 == 0:
        raise WitnessError(f"n must be odd, got {n}")
    moves = []
    p = 0
    for _ in range(n):
        moves.append(("u", (p, 0, 0), (p + 1, 0, 0)))
        p += 1
    for q in range(1, n + 1):
        moves.append(("v", (p, q - 1, 0), (p, q, 0)))
        target = 0 if q == n else (1 if q % 2 else n)
        step = 1 if target > p else -1
        while p != target:
            moves.append(("u" if step > 0 else "U", (p, q, 0), (p + step, q, 0)))
            p += step
    for q in range(n, 0, -1):
        moves.append(("V", (0, q, 0), (0, q - 1, 0)))
    letters = _expand(moves, _pieces(u=u_word, v=v_word))
    return TourPath(u_word.alphabet, letters, moves)


# --------------------------------------------------------------------------
# reports


@dataclass
class WitnessReport:
    xi: GroupWord
    epsilon: int
    branch: str  # "generic" | "abelian"
    n: int
    pair: SupportPair
    elements: list
    path: TourPath
    lam: Optional[Fraction] = None
    verdicts: dict = field(default_factory=dict)
    pruned: int = 0

    @property
    def N(self) -> int:
        return self.n + 1

    @property
    def card(self) -> int:
        return len(self.elements)

    @property
    def path_length(self) -> int:
        return self.path.length

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.path_length, self.card)

    @property
    def expected_length(self) -> int:
        if self.branch == "generic":
            return serpentine_length(self.n, self.pair.weight, len(self.xi))
        return boustrophedon_length(self.n, len(self.pair.u_word), len(self.pair.v_word))

    @property
    def ratio_bound(self) -> Fraction:
        """Generic: ``(|u|+|v|)/2 + 2|xi|/N``.  Abelian: formula length over the pruned cardinality."""
        if self.branch == "generic":
            return self.pair.constant + Fraction(2 * len(self.xi), self.N)
        return Fraction(self.expected_length, self.card)

    def to_json(self) -> dict:
        doc = {
            "xi": str(self.xi),
            "alphabet": self.xi.alphabet.name,
            "epsilon": self.epsilon,
            "branch": self.branch,
            "n": self.n,
            "N": self.N,
            "card": self.card,
            "path_word": str(self.path.word),
            "path_length": self.path_length,
            "ratio": _ratio_str(self.ratio),
            "ratio_bound": _ratio_str(self.ratio_bound),
            "verdicts": dict(self.verdicts),
        }
        if self.lam is not None:
            doc["lambda"] = _ratio_str(self.lam)
        if self.branch == "abelian":
            doc["pruned"] = self.pruned
        return doc


def _ratio_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_ratio(text: str) -> Fraction:
    """Exact rational from ``"p/q"``, an integer, or a finite decimal such as ``"2.6"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise WitnessError(f"cannot parse {text!r} as an exact rational") from None


def verify_witness(report: WitnessReport, xi: Optional[PLMap] = None) -> dict[str, bool]:
    """Recheck a report by multiplication only, ignoring the builder's bookkeeping."""
    xi = pl_from_word(report.xi) if xi is None else xi
    path = report.path
    alpha = path.alphabet
    g = path.start
    trace = {g}
    for i, s in path.letters:
        g = pl_compose(g, alpha.letter_map(i, s))
        trace.add(g)
    elements = set(report.elements)
    xi_inv = pl_invert(xi)
    return {
        "closure": g == path.start,
        "coverage": elements <= trace,
        "xi_related": bool(elements)
        and all(pl_compose(h, xi) in elements or pl_compose(h, xi_inv) in elements for h in elements),
        "length_formula": path.length == report.expected_length,
    }


# --------------------------------------------------------------------------
# degenerate (abelian) case


def _exponent_on(target: PLMap, gen: PLMap, interval, at_zero: bool, search: int = 64) -> Optional[int]:
    """``k`` with ``target == gen**k`` on ``interval``, or None."""
    t_slope = target.slopes[0] if at_zero else target.slopes[-1]
    g_slope = gen.slopes[0] if at_zero else gen.slopes[-1]
    if g_slope != 0:
        if t_slope % g_slope:
            return None
        candidates = [t_slope // g_slope]
    else:
        candidates = sorted(range(-search, search + 1), key=abs)
    for k in candidates:
        if agree_on(target, pl_power(gen, k), interval):
            return k
    return None


def abelian_exponents(lw: LemmaWitness, pair: SupportPair) -> Optional[tuple[int, int]]:
    """``(a, b)`` with ``z = u^a v^b`` if ``z`` lies in ``<u, v>`` and ``w == u``; else None."""
    u, v, z, s = pair.u, pair.v, lw.z, pair.split
    if lw.w != u:
        return None
    if lw.orientation == "upper":
        a = _exponent_on(z, u, (s, ONE), at_zero=False)
        b = _exponent_on(z, v, (ZERO, s), at_zero=True)
    else:
        a = _exponent_on(z, u, (ZERO, s), at_zero=True)
        b = _exponent_on(z, v, (s, ONE), at_zero=False)
    if a is None or b is None:
        return None
    if pl_compose(pl_power(u, a), pl_power(v, b)) != z:
        return None
    return a, b


def prune_to_related(elements, xi: PLMap) -> list:
    """Drop elements without a ``xi``-neighbour until none remain to drop."""
    xi_inv = pl_invert(xi)
    live = dict.fromkeys(elements)
    while True:
        dead = [
            g for g in live
            if pl_compose(g, xi) not in live and pl_compose(g, xi_inv) not in live
        ]
        if not dead:
            return list(live)
        for g in dead:
            del live[g]


def build_abelian_witness(
    xi: GroupWord, pair: SupportPair, n: int, lw: Optional[LemmaWitness] = None
) -> WitnessReport:
    """Boustrophedon tour over ``{u^p v^q}``, pruned to a ``xi``-related set."""
    lw = lw or lemma1_witness(xi, pair)
    if abelian_exponents(lw, pair) is None:
        raise WitnessError(f"xi = {xi} is not degenerate: z does not lie in <u, v>")
    if n < 1 or n % 2 == 0:
        raise WitnessError(f"n must be odd in the abelian branch, got {n}")
    up, vq = _powers(pair.u, n), _powers(pair.v, n)
    grid = [pl_compose(up[p], vq[q]) for q in range(n + 1) for p in range(n + 1)]
    kept = prune_to_related(grid, pl_from_word(xi))
    if not kept:
        raise WitnessError(f"pruning emptied the grid for n = {n}")
    path = build_boustrophedon_path(n, pair.u_word, pair.v_word)
    return WitnessReport(
        xi, lw.epsilon, "abelian", n, pair, kept, path, pruned=len(grid) - len(kept)
    )


# --------------------------------------------------------------------------
# end to end


def minimal_N(lam, xi_len: int, constant=Fraction(5, 2)) -> int:
    """Smallest odd ``N >= 3`` with ``N > 2 xi_len / (lam - constant)``."""
    lam, constant = Fraction(lam), Fraction(constant)
    if lam <= constant:
        raise WitnessError(f"lambda = {lam} must exceed {constant}")
    bound = Fraction(2 * xi_len) / (lam - constant)
    N = max(3, bound.numerator // bound.denominator + 1)
    if N % 2 == 0:
        N += 1
    return N


def build_generic_witness(xi: GroupWord, n: int, pair: Optional[SupportPair] = None,
                          lw: Optional[LemmaWitness] = None) -> tuple[WitnessReport, GridSet]:
    """Two-layer grid and serpentine for a fixed even ``n``, verified but with no ratio target."""
    pair = pair or standard_pair()
    lw = lw or lemma1_witness(xi, pair)
    grid = build_grid_set(lw, pair, n)
    path = build_serpentine_path(n, pair.u_word, pair.v_word, lw.z_word)
    report = WitnessReport(xi, lw.epsilon, "generic", n, pair, grid.elements, path)
    report.verdicts = verify_witness(report)
    return report, grid


def build_witness(xi: GroupWord, lam, pair: Optional[SupportPair] = None,
                  n: Optional[int] = None, n_max: int = 201) -> WitnessReport:
    """A verified witness whose tour ratio is strictly below ``lam``.

    The generic branch needs ``lam > (|u|+|v|)/2``; the abelian branch,
    taken when ``xi**eps`` lies in ``<u, v>``, accepts any ``lam > 1``.
    """
    pair = pair or standard_pair()
    lam = Fraction(lam)
    lw = lemma1_witness(xi, pair)

    report = None
    if lam > pair.constant:
        if n is None:
            n = minimal_N(lam, len(xi), pair.constant) - 1
        grid = build_grid_set(lw, pair, n)
        if not grid.degenerate:
            path = build_serpentine_path(n, pair.u_word, pair.v_word, lw.z_word)
            report = WitnessReport(xi, lw.epsilon, "generic", n, pair, grid.elements, path, lam)
        elif abelian_exponents(lw, pair) is None:
            raise LemmaFailure(
                f"grid layers collide for xi = {xi} but z is not in <u, v>; calibration is inconsistent"
            )
    elif abelian_exponents(lw, pair) is None:
        raise WitnessError(
            f"lambda = {lam} <= {pair.constant} needs the abelian branch, "
            f"but xi = {xi} is not degenerate"
        )

    if report is None:
        if lam <= 1:
            raise WitnessError(f"lambda = {lam} must exceed 1")
        report = _abelian_search(xi, lam, pair, lw, n_max)
        report.lam = lam

    report.verdicts = verify_witness(report)
    failed = [k for k, ok in report.verdicts.items() if not ok]
    if failed:
        raise VerificationError(f"witness for xi = {xi} failed: {', '.join(failed)}")
    if not report.ratio < lam:
        raise WitnessError(f"ratio {report.ratio} is not below lambda = {lam} at n = {report.n}")
    return report


def _abelian_search(xi, lam, pair, lw, n_max) -> WitnessReport:
    u_len, v_len = len(pair.u_word), len(pair.v_word)
    for n in range(3, n_max + 1, 2):
        # pruning only lowers Card, so the unpruned ratio is a lower bound
        if Fraction(boustrophedon_length(n, u_len, v_len), (n + 1) ** 2) >= lam:
            continue
        report = build_abelian_witness(xi, pair, n, lw)
        if report.ratio < lam:
            return report
    raise WitnessError(f"no odd n <= {n_max} reaches ratio < {lam}")


# --------------------------------------------------------------------------
# export


def grid_graph_dot(n: int, name: str = "Gamma") -> str:
    """DOT digraph of the labelled two-plane grid, before any element is attached."""
    N = n + 1
    lines = [f"digraph {name}_{n} {{"]
    for layer, tag in ((0, "b"), (1, "t")):
        for i in range(N):
            for j in range(N):
                lines.append(f'  {tag}_{i}_{j} [label="({i},{j},{layer})"];')
    for j in range(N):
        for i in range(n):
            lines.append(f'  b_{i}_{j} -> b_{i + 1}_{j} [label="v"];')
    for i in range(N):
        for j in range(n):
            lines.append(f'  t_{i}_{j} -> t_{i}_{j + 1} [label="u"];')
    for i in range(N):
        for j in range(N):
            lines.append(f'  b_{i}_{j} -> t_{i}_{j} [label="z"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
