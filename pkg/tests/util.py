"""Shared helpers for the test suite."""

import random
from fractions import Fraction

from eightvertex.numeric import Cyclo8, scalar
from eightvertex.signatures import Signature, EightVertexSig, apply_perm

# The entry pool used by fuzz tests: small exact values covering the
# rationals, the imaginary units and the eighth roots.
ENTRY_POOL = (
    scalar(0), scalar(1), scalar(-1), scalar(2), scalar(-2),
    scalar(Cyclo8.i()), scalar(-Cyclo8.i()),
    scalar(Cyclo8.alpha()), scalar(-Cyclo8.alpha()),
)

NONZERO_POOL = ENTRY_POOL[1:]


def random_signature(rng: random.Random, arity: int) -> Signature:
    return Signature(arity, [rng.choice(ENTRY_POOL) for _ in range(1 << arity)])


def random_ev(rng: random.Random) -> EightVertexSig:
    return EightVertexSig(*(rng.choice(ENTRY_POOL) for _ in range(8)))


def ev_sig(a, b, c, d, w, z, y, x) -> Signature:
    return EightVertexSig.make(a, b, c, d, w, z, y, x).to_signature()


def reorder(f: Signature, order) -> Signature:
    """The signature whose matrix is M_{x_i x_j, x_k x_l}(f) for
    order = (i, j, k, l)."""
    inv = [0] * 4
    for pos, v in enumerate(order):
        inv[v - 1] = pos + 1
    return apply_perm(f, inv)


def nonzero_fraction(rng: random.Random, lo=-9, hi=9, den=9) -> Fraction:
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if q != 0:
            return q


def random_affine_signature(rng: random.Random, arity: int):
    """A random member of class A, built straight from the definition:
    lam * i^Q on a random affine subspace."""
    from eightvertex.classes import AffineSpace, ACertificate

    n = arity
    space = None
    while space is None:
        pts = []
        rows = [(rng.randrange(1 << n), rng.randrange(2))
                for _ in range(rng.randrange(0, n + 1))]
        for m in range(1 << n):
            if all(bin(m & mask).count("1") % 2 == rhs for mask, rhs in rows):
                pts.append(m)
        if pts:
            space = AffineSpace.from_support(pts, n)
    lam = rng.choice(NONZERO_POOL)
    lin = {i: rng.randrange(4) for i in range(1, n + 1)}
    quad = {(i, j): rng.randrange(2)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    cert = ACertificate(lam, space, rng.randrange(4), lin, quad)
    return Signature(n, [cert.value_at(m) for m in range(1 << n)])


def random_grid(rng: random.Random, sig_pool, target_edges: int):
    """A random closed grid: vertices drawn from sig_pool (a dict
    name -> Signature) until the port count reaches about 2*target_edges
    with even parity, then a uniform perfect matching of all ports.  The
    edge count can overshoot the target by at most two."""
    from eightvertex.evaluate import Grid

    names = list(sig_pool)
    vertices = []
    ports = []
    while len(ports) // 2 < target_edges or len(ports) % 2:
        name = rng.choice(names)
        v = len(vertices)
        vertices.append(name)
        ports.extend((v, p) for p in range(1, sig_pool[name].arity + 1))
    rng.shuffle(ports)
    edges = [(ports[2 * k], ports[2 * k + 1]) for k in range(len(ports) // 2)]
    return Grid(dict(sig_pool), vertices, edges)
