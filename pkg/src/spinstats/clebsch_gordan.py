"""Exact Clebsch-Gordan tables for two coupled spins.

Tables are built by highest-weight construction: the stretched state is the
product of the two top states, each multiplet is filled in by applying the
total lowering operator, and each lower-L highest-weight state is the exact
orthogonal complement of the already-built states inside its fixed-M
subspace.  The complement is computed as a cofactor vector (a generalized
cross product of the existing rows), which for orthonormal rows is itself
normalized, so no division beyond single-radical rationalization ever
occurs.  Signs follow the Condon-Shortley convention: in every
highest-weight state the coefficient of the pair with the largest first
label is positive.

All labels are doubled integers (see :mod:`spinstats.labels`); amplitudes
are real :class:`~spinstats.exactnum.RadicalSum` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import RadicalSum
from .labels import format_label
from .spin_algebra import ladder_step

__all__ = [
    "CoupledState",
    "CGTable",
    "cg_table",
    "coupled_table",
    "photon_table",
    "exchange_symmetry",
    "squared_amplitudes",
    "lower_amplitudes",
]

Amplitudes = dict[tuple[int, int], RadicalSum]


@dataclass(frozen=True)
class CoupledState:
    """One |L,M> state as a map from product-basis pairs to exact amplitudes.

    ``two_L``/``two_M`` are the rendered labels; in the n=2 mode they are the
    scaled labels and ``label_scale`` records the scaling.
    """

    two_L: int
    two_M: int
    amplitudes: Amplitudes
    label_scale: int = 1

    def __post_init__(self) -> None:
        norm2 = RadicalSum.zero()
        for (two_m1, two_m2), amp in self.amplitudes.items():
            if two_m1 + two_m2 != self.two_M:
                raise ValueError(
                    f"pair ({format_label(two_m1)},{format_label(two_m2)}) does not sum "
                    f"to M={format_label(self.two_M)}"
                )
            norm2 = norm2 + amp * amp
        if norm2.as_fraction() != 1:
            raise ValueError(f"state |{self.labels}> is not normalized: norm^2 = {norm2}")

    @property
    def labels(self) -> str:
        return f"{format_label(self.two_L)},{format_label(self.two_M)}"

    def ordered_pairs(self) -> list[tuple[int, int]]:
        """Support pairs in descending first-label order."""
        return sorted(self.amplitudes, key=lambda p: p[0], reverse=True)

    def render(self) -> str:
        parts: list[str] = []
        for pair in self.ordered_pairs():
            amp = self.amplitudes[pair]
            ket = f"|{format_label(pair[0])},{format_label(pair[1])}>"
            text = str(amp)
            if amp.term_count > 1:
                text = f"({text})"
            if not parts:
                parts.append(f"{text}{ket}")
            elif text.startswith("-"):
                parts.append(f"- {text[1:]}{ket}")
            else:
                parts.append(f"+ {text}{ket}")
        return f"|{self.labels}> = " + " ".join(parts)

    def to_json(self) -> dict:
        return {
            "L": format_label(self.two_L),
            "M": format_label(self.two_M),
            "terms": [
                {
                    "m1": format_label(pair[0]),
                    "m2": format_label(pair[1]),
                    "amplitude": str(self.amplitudes[pair]),
                }
                for pair in self.ordered_pairs()
            ],
        }


@dataclass(frozen=True)
class CGTable:
    """All coupled states of one decomposition, descending L then M."""

    two_l1: int
    two_l2: int
    n: int
    states: tuple[CoupledState, ...] = field(repr=False)

    def state(self, two_L: int, two_M: int) -> CoupledState:
        for st in self.states:
            if st.two_L == two_L and st.two_M == two_M:
                return st
        raise ValueError(
            f"no state |{format_label(two_L)},{format_label(two_M)}> in this table"
        )

    def render_text(self) -> str:
        return "\n".join(st.render() for st in self.states)

    def to_json(self) -> dict:
        return {
            "l": format_label(self.two_l1 * self.n),
            "n": self.n,
            "states": [st.to_json() for st in self.states],
        }


def lower_amplitudes(amps: Amplitudes, two_l1: int, two_l2: int) -> Amplitudes:
    """Apply the total lowering operator L1- + L2- to an amplitude map (unnormalized)."""
    out: Amplitudes = {}
    for (two_m1, two_m2), coeff in amps.items():
        if two_m1 > -two_l1:
            step = ladder_step(two_l1, two_m1, raising=False)
            key = (two_m1 - 2, two_m2)
            merged = out.get(key, RadicalSum.zero()) + coeff * step
            _set(out, key, merged)
        if two_m2 > -two_l2:
            step = ladder_step(two_l2, two_m2, raising=False)
            key = (two_m1, two_m2 - 2)
            merged = out.get(key, RadicalSum.zero()) + coeff * step
            _set(out, key, merged)
    return out


def _set(amps: Amplitudes, key: tuple[int, int], value: RadicalSum) -> None:
    if value.is_zero:
        amps.pop(key, None)
    else:
        amps[key] = value


def _pairs_at(two_M: int, two_l1: int, two_l2: int) -> list[tuple[int, int]]:
    lo = max(-two_l1, two_M - two_l2)
    hi = min(two_l1, two_M + two_l2)
    return [(m1, two_M - m1) for m1 in range(hi, lo - 2, -2)]


def _det(rows: list[list[RadicalSum]]) -> RadicalSum:
    k = len(rows)

    def expand(r: int, cols: tuple[int, ...]) -> RadicalSum:
        if r == k:
            return RadicalSum.from_rational(1)
        total = RadicalSum.zero()
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero:
                continue
            term = entry * expand(r + 1, cols[:pos] + cols[pos + 1 :])
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return expand(0, tuple(range(k)))


def _orthogonal_complement(
    rows: list[list[RadicalSum]], pairs: list[tuple[int, int]]
) -> Amplitudes:
    """The unit vector orthogonal to k-1 orthonormal rows in a k-dim subspace.

    Cofactor construction: component j is (-1)^j times the minor obtained by
    deleting column j.  Because the rows are orthonormal the result is
    exactly normalized already.
    """
    k = len(pairs)
    if len(rows) != k - 1:
        raise ValueError(f"need {k - 1} states to fix a new one, got {len(rows)}")
    components = []
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in rows]
        det = _det(minor)
        components.append(det if j % 2 == 0 else -det)
    # Condon-Shortley: leading (largest m1) nonzero coefficient positive
    flip = False
    for comp in components:
        if not comp.is_zero:
            flip = comp.to_float() < 0
            break
    if flip:
        components = [-c for c in components]
    return {pair: comp for pair, comp in zip(pairs, components) if not comp.is_zero}


def coupled_table(two_l1: int, two_l2: int) -> CGTable:
    """Exact decomposition of the product of two representations.

    States are generated for L from l1+l2 down to |l1-l2|, each multiplet
    filled top-down by lowering.
    """
    if two_l1 < 0 or two_l2 < 0:
        raise ValueError("spin labels must be nonnegative")
    states: list[CoupledState] = []
    by_lm: dict[tuple[int, int], CoupledState] = {}
    top = two_l1 + two_l2
    bottom = abs(two_l1 - two_l2)
    for two_L in range(top, bottom - 2, -2):
        if two_L == top:
            amps: Amplitudes = {(two_l1, two_l2): RadicalSum.from_rational(1)}
        else:
            pairs = _pairs_at(two_L, two_l1, two_l2)
            rows = []
            for two_L_prev in range(top, two_L, -2):
                prev = by_lm[(two_L_prev, two_L)]
                rows.append([prev.amplitudes.get(p, RadicalSum.zero()) for p in pairs])
            amps = _orthogonal_complement(rows, pairs)
        for two_M in range(two_L, -two_L - 2, -2):
            if two_M < two_L:
                lowered = lower_amplitudes(amps, two_l1, two_l2)
                norm = ladder_step(two_L, two_M + 2, raising=False)
                amps = {pair: c / norm for pair, c in lowered.items()}
            state = CoupledState(two_L, two_M, dict(amps))
            states.append(state)
            by_lm[(two_L, two_M)] = state
    return CGTable(two_l1=two_l1, two_l2=two_l2, n=1, states=tuple(states))


def cg_table(two_l: int) -> CGTable:
    """Standard-mode table for two equal spins l (doubled label), 2l <= 6."""
    if not 0 <= two_l <= 6:
        raise ValueError(f"supported range is 0 <= 2l <= 6, got 2l = {two_l}")
    return coupled_table(two_l, two_l)


def photon_table() -> CGTable:
    """The n=2 two-state mode: two doublets with labels +-1 and step 2.

    Internally this is the coupling of two half-unit doublets with every
    label scaled by 2, so the pair carries totals {2, 0, -2} and a lone
    |0,0>; no single-particle 0 label can appear anywhere.
    """
    base = coupled_table(1, 1)
    states = tuple(
        CoupledState(
            two_L=st.two_L * 2,
            two_M=st.two_M * 2,
            amplitudes={(m1 * 2, m2 * 2): amp for (m1, m2), amp in st.amplitudes.items()},
            label_scale=2,
        )
        for st in base.states
    )
    return CGTable(two_l1=1, two_l2=1, n=2, states=states)


def exchange_symmetry(state: CoupledState, two_l: int) -> str:
    """Classify an equal-l coupled state under swapping the two particles.

    Returns ``"symmetric"`` or ``"antisymmetric"`` and checks the result
    against the expected phase (-1)^(L-2l); a state violating both
    symmetries, or disagreeing with the phase, is a consistency error.
    """
    symmetric = True
    antisymmetric = True
    for (m1, m2), amp in state.amplitudes.items():
        swapped = state.amplitudes.get((m2, m1), RadicalSum.zero())
        if swapped != amp:
            symmetric = False
        if swapped != -amp:
            antisymmetric = False
    if not (symmetric or antisymmetric):
        raise ValueError(f"state |{state.labels}> is neither symmetric nor antisymmetric")
    exponent = (state.two_L // state.label_scale - 2 * two_l) // 2
    expected = "symmetric" if exponent % 2 == 0 else "antisymmetric"
    got = "symmetric" if symmetric else "antisymmetric"
    if got != expected:
        raise ValueError(
            f"state |{state.labels}> is {got} but the exchange phase "
            f"(-1)^(L-2l) = {'+1' if expected == 'symmetric' else '-1'}"
        )
    return got


def squared_amplitudes(state: CoupledState) -> dict[tuple[int, int], Fraction]:
    """Exact squared amplitude of every pair; they always sum to 1.

    Each amplitude must be a single radical term (so its square is rational);
    anything else is outside this package's precision model and is reported
    with the offending amplitude.
    """
    out: dict[tuple[int, int], Fraction] = {}
    for pair, amp in state.amplitudes.items():
        if amp.term_count != 1:
            raise ValueError(
                f"amplitude {amp} of pair ({format_label(pair[0])},{format_label(pair[1])}) "
                "does not square to a rational"
            )
        out[pair] = (amp * amp).as_fraction()
    return out
