"""The eight relatives of a Leonard system: the dihedral group D4 generated by
``*`` (swap A and A*), ``down`` (reverse the dual ordering) and ``Down``
(reverse the ordering), and its action on parameter arrays.

A word is read left to right, each letter acting on the result of the
previous one. ``compose(g, h)`` is the element whose action is "apply h, then g".
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable

from .parray import ParameterArray


class D4Element(Enum):
    # value = (swap, rev_E, rev_Estar) after normalising to "reversals, then swap"
    ID = (False, False, False)
    DOWN = (False, False, True)
    DDOWN = (False, True, False)
    DOWN_DDOWN = (False, True, True)
    STAR = (True, False, False)
    DOWN_STAR = (True, False, True)
    DDOWN_STAR = (True, True, False)
    DOWN_DDOWN_STAR = (True, True, True)

    @property
    def code(self) -> str:
        swap, rev_e, rev_es = self.value
        name = ("d" if rev_es else "") + ("D" if rev_e else "") + ("s" if swap else "")
        return name or "id"

    @property
    def symbol(self) -> str:
        return {"id": "id", "d": "↓", "D": "⇓", "dD": "↓⇓", "s": "*", "ds": "↓*",
                "Ds": "⇓*", "dDs": "↓⇓*"}[self.code]

    @classmethod
    def parse(cls, text: str) -> D4Element:
        text = text.strip()
        for g in cls:
            if text in (g.code, g.symbol):
                return g
        return word(text)

    def __str__(self):
        return self.code

    @property
    def involves_star(self) -> bool:
        return self.value[0]


ORDER = tuple(D4Element)
GENERATORS = {"d": D4Element.DOWN, "D": D4Element.DDOWN, "s": D4Element.STAR}


def _step(state: tuple, letter: str) -> tuple:
    swap, a, b = state
    if letter == "s":
        return (not swap, a, b)
    if letter == "d":
        # reverse the current dual ordering: which underlying sequence that is depends on swap
        return (swap, not a, b) if swap else (swap, a, not b)
    if letter == "D":
        return (swap, a, not b) if swap else (swap, not a, b)
    raise ValueError(f"unknown D4 letter {letter!r}")


def _letters(text: str) -> list:
    table = {"↓": "d", "⇓": "D", "*": "s", "d": "d", "D": "D", "s": "s"}
    out = []
    for ch in text:
        if ch in " ,":
            continue
        if ch not in table:
            raise ValueError(f"unknown D4 letter {ch!r}")
        out.append(table[ch])
    return out


def word(text: str) -> D4Element:
    """Reduce a word in d/D/s (or the arrow symbols) to one of the 8 elements."""
    state = (False, False, False)
    if text.strip() not in ("", "id"):
        for letter in _letters(text):
            state = _step(state, letter)
    return D4Element(state)


def _letters_of(g: D4Element) -> list:
    return [] if g is D4Element.ID else list(g.code)


def compose(g: D4Element, h: D4Element) -> D4Element:
    """The element acting as "apply h, then g"."""
    state = h.value
    for letter in _letters_of(g):
        state = _step(state, letter)
    return D4Element(state)


def inverse(g: D4Element) -> D4Element:
    return next(x for x in ORDER if compose(x, g) is D4Element.ID)


def _rev(seq: tuple) -> tuple:
    return tuple(reversed(seq))


def act(pa: ParameterArray, g: D4Element) -> ParameterArray:
    """Parameter array of the relative named by g."""
    th, ts, vp, ph = pa.theta, pa.theta_star, pa.varphi, pa.phi
    rows = {
        "id": (th, ts, vp, ph),
        "d": (th, _rev(ts), _rev(ph), _rev(vp)),
        "D": (_rev(th), ts, ph, vp),
        "dD": (_rev(th), _rev(ts), _rev(vp), _rev(ph)),
        "s": (ts, th, vp, _rev(ph)),
        "ds": (_rev(ts), th, _rev(ph), vp),
        "Ds": (ts, _rev(th), ph, _rev(vp)),
        "dDs": (_rev(ts), _rev(th), _rev(vp), ph),
    }
    a, b, c, e = rows[g.code]
    return ParameterArray(pa.d, a, b, c, e, pa.field)


def act_word(pa: ParameterArray, letters: Iterable[str]) -> ParameterArray:
    """Apply generators one at a time, left to right."""
    for letter in letters:
        pa = act(pa, GENERATORS[letter])
    return pa


def orbit(pa: ParameterArray) -> dict:
    """All eight relatives keyed by element, in canonical order, without deduplication."""
    return {g: act(pa, g) for g in ORDER}
