"""Classical reference tables for the simple Lie algebras.

These tables are verification data only: nothing in the constructive code
paths reads them, so comparing computed root systems, Coxeter numbers or
exponents against them is an independent check.
"""

from __future__ import annotations

_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


def coxeter_number(family: str, rank: int) -> int:
    if family == "A":
        return rank + 1
    if family in ("B", "C"):
        return 2 * rank
    if family == "D":
        return 2 * rank - 2
    if family == "E":
        return {6: 12, 7: 18, 8: 30}[rank]
    if family == "F":
        return 12
    if family == "G":
        return 6
    raise ValueError(f"unknown family {family!r}")


def positive_root_count(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if family == "F":
        return 24
    if family == "G":
        return 6
    raise ValueError(f"unknown family {family!r}")


def exponents(family: str, rank: int) -> tuple[int, ...]:
    """Exponents in ascending order (with multiplicity, e.g. D4 has 1,3,3,5)."""
    if family == "A":
        return tuple(range(1, rank + 1))
    if family in ("B", "C"):
        return tuple(range(1, 2 * rank, 2))
    if family == "D":
        return tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    return _EXCEPTIONAL_EXPONENTS[(family, rank)]


def simply_laced(family: str) -> bool:
    return family in ("A", "D", "E")


def all_algebras(max_rank: int = 8) -> list[str]:
    """Every simple algebra label up to the given rank, in a fixed order."""
    names: list[str] = []
    names += [f"A{r}" for r in range(1, max_rank + 1)]
    names += [f"B{r}" for r in range(2, max_rank + 1)]
    names += [f"C{r}" for r in range(2, max_rank + 1)]
    names += [f"D{r}" for r in range(3, max_rank + 1)]
    names += [f"E{r}" for r in (6, 7, 8) if r <= max_rank]
    if max_rank >= 4:
        names.append("F4")
    if max_rank >= 2:
        names.append("G2")
    return names


def simply_laced_algebras(max_rank: int = 8) -> list[str]:
    return [name for name in all_algebras(max_rank) if simply_laced(name[0])]
