import numpy as np
import pytest

from finring import build_gallery_ring, gallery_names


@pytest.fixture(scope="session")
def gallery():
    """Every gallery ring, built once for the whole run."""
    return {name: build_gallery_ring(name) for name in gallery_names()}


def zmod_tables(n: int):
    """Independent oracle: Z/n from modular arithmetic, no package code."""
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return add, mul


def gf4_tables():
    """Independent oracle: GF(4) = F2[t]/(t^2+t+1), elements a+bt as 2a+b.

    Index encoding: 0, 1, t, t+1 -> 0, 1, 2, 3 with (a, b) -> 2*b + a.
    """
    def enc(a, b):
        return 2 * b + a

    def dec(i):
        return i & 1, i >> 1

    add = np.zeros((4, 4), dtype=np.int64)
    mul = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        a1, b1 = dec(i)
        for j in range(4):
            a2, b2 = dec(j)
            add[i, j] = enc((a1 + a2) % 2, (b1 + b2) % 2)
            # (a1 + b1 t)(a2 + b2 t) = a1 a2 + (a1 b2 + a2 b1) t + b1 b2 t^2
            # and t^2 = t + 1
            c0 = (a1 * a2 + b1 * b2) % 2
            c1 = (a1 * b2 + a2 * b1 + b1 * b2) % 2
            mul[i, j] = enc(c0, c1)
    return add, mul


def mat2_gf2_tables():
    """Independent oracle: 2x2 matrices over GF(2), flattened row-major."""
    def enc(m):
        return m[0][0] * 8 + m[0][1] * 4 + m[1][0] * 2 + m[1][1]

    def dec(i):
        return [[(i >> 3) & 1, (i >> 2) & 1], [(i >> 1) & 1, i & 1]]

    add = np.zeros((16, 16), dtype=np.int64)
    mul = np.zeros((16, 16), dtype=np.int64)
    for i in range(16):
        x = dec(i)
        for j in range(16):
            y = dec(j)
            s = [[(x[r][c] + y[r][c]) % 2 for c in range(2)] for r in range(2)]
            p = [[sum(x[r][k] * y[k][c] for k in range(2)) % 2
                  for c in range(2)] for r in range(2)]
            add[i, j] = enc(s)
            mul[i, j] = enc(p)
    return add, mul
