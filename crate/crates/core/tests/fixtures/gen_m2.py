"""Regenerates m2_parity.json.

A line-for-line Python rendering of the Macaulay2 functions range,
negativeIndices, relevantSet, isFace, setToMonomial, convertToComplex and
degreeComplex, run on seeded random ideals. The expected output is the facet
list Macaulay2 prints for the resulting simplicialComplex, with variables
named x_1..x_n.

    python3 gen_m2.py > m2_parity.json
"""

import itertools
import json
import random


def m2_range(maximum):
    return list(range(maximum))


def negative_indices(expvector):
    return [i for i in range(len(expvector)) if expvector[i] < 0]


def relevant_set(someset, expvector):
    return sorted(set(m2_range(len(expvector))) - set(someset) - set(negative_indices(expvector)))


def is_face(someset, gens, expvector):
    for g in gens:
        chex = False
        for i in relevant_set(someset, expvector):
            if g[i] > expvector[i]:
                chex = True
        if not chex:
            return False
    return True


def set_to_monomial(someset):
    return frozenset(someset)


def convert_to_complex(list_of_faces):
    monomials = {set_to_monomial(f) for f in list_of_faces} - {frozenset()}
    return sorted(
        (sorted(f) for f in monomials if not any(f < g for g in monomials)),
        key=lambda f: (-len(f), f),
    )


def degree_complex(gens, expvector):
    ground = sorted(set(m2_range(len(expvector))) - set(negative_indices(expvector)))
    face_list = []
    for k in range(len(ground) + 1):
        for f in itertools.combinations(ground, k):
            if is_face(list(f), gens, expvector):
                face_list.append(f)
    return convert_to_complex(face_list)


def monomial_text(n, g):
    factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g) if e > 0]
    return "*".join(factors)


def minimal(gens):
    gens = sorted(set(gens))
    return [g for g in gens if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens)]


def main():
    rng = random.Random(20240611)
    cases = []
    while len(cases) < 50:
        n = rng.randint(2, 6)
        squarefree = rng.random() < 0.6
        top = 1 if squarefree else 3
        gens = []
        for _ in range(rng.randint(1, 4)):
            support = rng.sample(range(n), min(n, rng.randint(2, 3)))
            gens.append(tuple(rng.randint(1, top) if i in support else 0 for i in range(n)))
        gens = minimal(gens)
        if not gens:
            continue
        gamma = [rng.randint(-2, -1) if rng.random() < 0.15 else rng.randint(0, 2) for _ in range(n)]
        facets = degree_complex(gens, gamma)
        cases.append(
            {
                "facets": ["*".join(f"x_{i + 1}" for i in f) for f in facets],
                "gamma": gamma,
                "ideal": f"n={n}; " + ", ".join(monomial_text(n, g) for g in gens),
            }
        )
    json.dump(cases, __import__("sys").stdout, indent=1, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
