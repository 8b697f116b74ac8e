# Árvore binária 2^{<ω}: ordem de prefixo e ordem horizontal.
import itertools
from typing import FrozenSet, Iterator

from core.excecoes import InputFormatError


def check_node(sigma: str) -> str:
    if any(ch not in "01" for ch in sigma):
        raise InputFormatError(f"nó inválido: {sigma!r} (só 0 e 1)")
    return sigma


def successor(sigma: str, bit: str) -> str:
    return sigma + bit


def predecessor(sigma: str) -> str:
    return sigma[:-1]


def prefix_leq(sigma: str, tau: str) -> bool:
    """τ estende σ."""
    return tau.startswith(sigma)


def predecessor_closure(tau: str) -> FrozenSet[str]:
    """Menor conjunto que contém τ e é fechado por predecessor imediato."""
    closure = {tau}
    frontier = tau
    while frontier:
        frontier = predecessor(frontier)
        closure.add(frontier)
    return frozenset(closure)


def prefix_leq_definable(sigma: str, tau: str) -> bool:
    """Forma definível da ordem de prefixo: σ está no fecho de τ por predecessores."""
    return sigma in predecessor_closure(tau)


def infimum(sigma: str, tau: str) -> str:
    """Maior prefixo comum."""
    size = 0
    for a, b in zip(sigma, tau):
        if a != b:
            break
        size += 1
    return sigma[:size]


def horizontal(sigma: str, tau: str) -> bool:
    """
        σ ⪯ τ: σ = τ, ou σ1 ≤ τ, ou τ0 ≤ σ, ou σ e τ incomparáveis com γ0 ≤ σ, onde γ é
        o ínfimo. As cláusulas são avaliadas na ordem em que aparecem.
    """
    if sigma == tau:
        return True
    if prefix_leq(successor(sigma, "1"), tau):
        return True
    if prefix_leq(successor(tau, "0"), sigma):
        return True
    if prefix_leq(sigma, tau) or prefix_leq(tau, sigma):
        return False
    return prefix_leq(successor(infimum(sigma, tau), "0"), sigma)


def strictly_horizontal(sigma: str, tau: str) -> bool:
    return sigma != tau and horizontal(sigma, tau)


def nodes(max_length: int) -> Iterator[str]:
    """Todos os nós com comprimento ≤ max_length, por comprimento e depois lexicográfico."""
    for length in range(max_length + 1):
        for bits in itertools.product("01", repeat=length):
            yield "".join(bits)
