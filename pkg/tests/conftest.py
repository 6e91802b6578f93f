import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import greenseq as gs


def affine_words(n: int) -> list[str]:
    return [w for w in gs.all_sign_words(n) if "+" in w and "-" in w]


def affine_quivers(max_n: int, min_n: int = 2) -> list[gs.Quiver]:
    return [gs.affine_a(w) for n in range(min_n, max_n + 1) for w in affine_words(n)]


def finite_quivers(max_n: int, min_n: int = 1) -> list[gs.Quiver]:
    return [gs.finite_a(w) for n in range(min_n, max_n + 1) for w in gs.all_sign_words(n - 1)]


def cycle_quivers(max_n: int, min_n: int = 4) -> list[gs.Quiver]:
    return [gs.cycle_quiver(n) for n in range(min_n, max_n + 1)]
