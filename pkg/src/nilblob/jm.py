"""Jucys-Murphy type elements L_i, Y_i and J = sum(L_i) inside the nil-blob algebra."""

from __future__ import annotations

import functools

from .algebra import Element, ExtElement
from .presentation import generator_element


@functools.lru_cache(maxsize=None)
def L_elements(n: int, c: int = 2) -> tuple[Element, ...]:
    """L_1 = U_0 and L_{i+1} = U_i L_i + L_i U_i + c U_i (L_1 + ... + L_{i-1}).

    Only c = 2 gives commuting L_i with L_i^2 = -2 L_i (L_1 + ... + L_{i-1})
    and (sum L_i)^2 = 0 under U_i^2 = -2 U_i; c = -2 already fails at n = 3.
    """
    L = [generator_element(n, 0)]
    for i in range(1, n):
        U = generator_element(n, i)
        lower = sum(L[:-1], Element.zero(n))
        L.append(U * L[-1] + L[-1] * U + (U * lower).scale(c))
    return tuple(L)


@functools.lru_cache(maxsize=None)
def Y_elements(n: int) -> tuple[Element, ...]:
    """Y_1 = U_0 and Y_{i+1} = (U_i + 1) Y_i (U_i + 1)."""
    Y = [generator_element(n, 0)]
    for i in range(1, n):
        S = generator_element(n, i) + 1
        Y.append(S * Y[-1] * S)
    return tuple(Y)


@functools.lru_cache(maxsize=None)
def J_element(n: int) -> Element:
    return sum(L_elements(n), Element.zero(n))


def formal_J(n: int) -> ExtElement:
    return ExtElement.J(n)
