"""Backend parity: the compiled kernels must agree with the pure-Python
kernels operation by operation."""

from wreathmac import _kernels_py as pyk
from wreathmac import kernels


def rand_dict(rng, nterms=8, maxexp=6):
    return {
        (rng.randrange(0, maxexp), rng.randrange(0, maxexp)): rng.randrange(-9, 10) or 1
        for _ in range(nterms)
    }


def rand_rec(rng, dw=4, dz=4):
    out = []
    for _ in range(rng.randrange(1, dw)):
        row = [rng.randrange(-6, 7) for _ in range(rng.randrange(0, dz))]
        out.append(row)
    return pyk.btrim([pyk.utrim(r) for r in out])


def test_pmul_parity(rng):
    for _ in range(30):
        a, b = rand_dict(rng), rand_dict(rng)
        assert kernels.pmul(a, b) == pyk.pmul(a, b)


def test_padd_parity(rng):
    for _ in range(30):
        a, b = rand_dict(rng), rand_dict(rng)
        assert kernels.padd(a, b) == pyk.padd(a, b)


def test_bmul_and_gcd_parity(rng):
    for _ in range(25):
        a, b = rand_rec(rng), rand_rec(rng)
        assert kernels.bmul(a, b) == pyk.bmul(a, b)
        if a and b:
            assert kernels.bgcd(a, b) == pyk.bgcd(a, b)


def test_gcd_divides_products(rng):
    for _ in range(25):
        a, b, c = rand_rec(rng), rand_rec(rng), rand_rec(rng)
        if not (a and b and c):
            continue
        ac = kernels.bmul(a, c)
        bc = kernels.bmul(b, c)
        g = kernels.bgcd(ac, bc)
        # c divides the gcd; both products are divisible by the gcd
        kernels.bdivexact(g, kernels.bgcd(g, c))
        qa = kernels.bdivexact(ac, g)
        assert kernels.bmul(qa, g) == ac


def test_divexact_roundtrip(rng):
    for _ in range(25):
        a, b = rand_rec(rng), rand_rec(rng)
        if not (a and b):
            continue
        ab = kernels.bmul(a, b)
        assert kernels.bdivexact(ab, b) == pyk.btrim([pyk.utrim(r) for r in a])


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
