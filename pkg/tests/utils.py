"""
Brute-force oracles used to cross-check the library in unit and property tests.
They follow the definitions literally and are only meant for tiny classes.
"""
from itertools import combinations, permutations, product

from vcradon.classes import ConceptClass


#######################################################################
#                            Shattering                               #
#######################################################################


def value(c, x, n):
    return (c >> (n - 1 - x)) & 1


def naive_shatters(C, A):
    patterns = {tuple(value(c, x, C.n) for x in A) for c in C}
    return len(C) > 0 and len(patterns) == 2 ** len(A)


def naive_shattered_sets(C):
    out = []
    for k in range(C.n + 1):
        out.extend(A for A in combinations(range(C.n), k) if naive_shatters(C, A))
    return out


def naive_vc(C):
    return max(len(A) for A in naive_shattered_sets(C))


#######################################################################
#                             Convexity                               #
#######################################################################


def naive_hull(C, P):
    """
    Intersection of all half-spaces C_{x,y} that contain P.
    """
    P = set(P)
    if not P:
        return frozenset()
    out = set(C)
    for x in range(C.n):
        for y in (0, 1):
            H = {c for c in C if value(c, x, C.n) == y}
            if P <= H:
                out &= H
    return frozenset(out)


def naive_radon_independent(C, P):
    P = list(P)
    for k in range(1, len(P)):
        for I in combinations(P, k):
            J = [p for p in P if p not in I]
            if naive_hull(C, I) & naive_hull(C, J):
                return False
    return True


def naive_radon_number(C):
    best = 1
    for k in range(2, len(C) + 1):
        if not any(naive_radon_independent(C, P) for P in combinations(C.concepts, k)):
            break
        best = k
    return best


#######################################################################
#                             Symmetry                                #
#######################################################################


def naive_relabelings(C):
    """
    Every image of C under a coordinate permutation followed by a xor.
    """
    n = C.n
    for perm in permutations(range(n)):
        for flip in product((0, 1), repeat=n):
            out = []
            for c in C:
                bits = [0] * n
                for x in range(n):
                    bits[perm[x]] = value(c, x, n)
                out.append("".join(str(b ^ f) for b, f in zip(bits, flip)))
            yield ConceptClass(n, out)


def naive_isomorphic(C, D):
    return any(E == D for E in naive_relabelings(C))
