import logging
import random
from functools import lru_cache
from itertools import pairwise, product
from typing import Iterable, Sequence

import numpy as np
from django.conf import settings
from rest_framework.exceptions import ValidationError
from sympy import Matrix, isprime, multiplicity, primefactors
from sympy.combinatorics import Permutation, PermutationGroup

from lie_orders.domain import CyclicWitness, LieTypeSpec
from lie_orders.services import identify_simple_by_order

from .domain import (FactorKind, FiniteGroup, FrattiniResult, GroupHom,
                     Lemma1Report, MatrixTag, Quotient, SimpleFactorId)
from .exceptions import (CapExceeded, ElementNotInGroup, 
                         InvalidPermutation, InvalidPrime,
                         InvariantViolated, NotAHomomorphism, NotNormal,
                         SingularMatrix)
from .utils import (Perm, as_perm, closure, concat, conj, identity_perm,
                    mul, power)

logger = logging.getLogger("project")


def resolve_cap(cap: int | None) -> int:
    return settings.GROUP_ORDER_CAP if cap is None else cap


def assemble(
    degree: int,
    generators: Iterable[Perm],
    elements: Iterable[Perm],
    *,
    matrix_tag: MatrixTag | None = None,
    name: str = "",
) -> FiniteGroup:
    """
    Wraps an already closed element set; no verification.
    """
    return FiniteGroup(
        degree=degree,
        generators=tuple(generators),
        elements=tuple(sorted(elements)),
        matrix_tag=matrix_tag,
        name=name,
    )


def _require_prime(p: int) -> int:
    if not isprime(p):
        raise InvalidPrime(f"{p} is not prime")
    return p


def _require_members(G: FiniteGroup, elements: Iterable[Sequence[int]]) -> list[Perm]:
    members = []
    for x in elements:
        perm = as_perm(x, G.degree)
        if perm not in G:
            raise ElementNotInGroup(f"{list(perm)} is not an element of {G!r}")
        members.append(perm)
    return members


def _grow(degree: int, candidates: Iterable[Perm], cap: int) -> tuple[list[Perm], frozenset[Perm]]:
    """
    Greedy generating set: a candidate is kept only when it is not already in
    the subgroup generated so far.
    """
    gens: list[Perm] = []
    current = frozenset({identity_perm(degree)})
    for x in candidates:
        if x not in current:
            gens.append(x)
            current = closure(degree, gens, cap)
    return gens, current


# construction
def generate(degree: int, generators: Sequence[Perm], cap: int) -> frozenset[Perm]:
    """
    Element set of the permutation group on 1..degree generated by
    ``generators``. The order comes from Schreier-Sims and is checked against
    ``cap`` before anything is enumerated.
    """
    backend = PermutationGroup(
        [Permutation([i - 1 for i in g]) for g in generators] or [Permutation(list(range(degree)))]
    )
    order = backend.order()
    if order > cap:
        raise CapExceeded(f"Group order {order} exceeds the cap of {cap} elements")
    return frozenset(tuple(i + 1 for i in af) for af in backend.generate(af=True))


def make_perm_group(
    degree: int,
    generators: Sequence[Sequence[int]],
    *,
    cap: int | None = None,
    name: str = "",
) -> FiniteGroup:
    """
    Enumerates the permutation group generated by ``generators`` (1-based
    one-line image lists).
    """
    if degree < 1:
        raise InvalidPermutation(f"degree must be positive, got {degree}")

    gens = tuple(as_perm(g, degree) for g in generators)
    elements = generate(degree, gens, resolve_cap(cap))
    group = assemble(degree, gens, elements, name=name)
    logger.info(
        "Built permutation group %s of order %s on %s points",
        name or "<anonymous>",
        group.order,
        degree,
    )
    return group


def _vector_action(matrix: np.ndarray, vectors: np.ndarray, weights: np.ndarray, p: int) -> Perm:
    """
    Permutation induced on nonzero column vectors. Vectors are numbered by their
    base-p value, which is also their lexicographic rank among nonzero vectors.
    """
    images = (vectors @ matrix.T) % p
    return tuple(int(code) for code in images @ weights)


def _matrix_closure_order(matrices: list[np.ndarray], n: int, p: int, cap: int) -> int:
    identity = np.eye(n, dtype=np.int64)
    seen = {identity.tobytes()}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in matrices:
                y = (x @ g) % p
                key = y.tobytes()
                if key not in seen:
                    seen.add(key)
                    if len(seen) > cap:
                        raise CapExceeded(f"Matrix group order exceeds the cap of {cap}")
                    next_frontier.append(y)
        frontier = next_frontier
    return len(seen)


def make_matrix_group(
    n: int,
    p: int,
    generator_matrices: Sequence[Sequence[Sequence[int]]],
    *,
    cap: int | None = None,
    name: str = "",
) -> FiniteGroup:
    """
    Builds the group generated by invertible n×n matrices over the p-element
    field, realised as permutations of the p^n - 1 nonzero column vectors.
    The action is faithful; for n <= 2 the order is cross-checked against a
    direct enumeration of the matrices.
    """
    _require_prime(p)
    cap = resolve_cap(cap)

    matrices = []
    for raw in generator_matrices:
        matrix = np.array(raw, dtype=np.int64) % p
        if matrix.shape != (n, n):
            raise ValidationError(f"expected a {n}x{n} matrix, got shape {matrix.shape}")
        if Matrix(matrix.tolist()).det() % p == 0:
            raise SingularMatrix(f"{matrix.tolist()} is singular modulo {p}")
        matrices.append(matrix)

    vectors = np.array(list(product(range(p), repeat=n))[1:], dtype=np.int64)
    weights = np.array([p ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    degree = p**n - 1

    gens = tuple(_vector_action(m, vectors, weights, p) for m in matrices)
    elements = generate(degree, gens, cap)
    group = assemble(degree, gens, elements, matrix_tag=MatrixTag(n=n, p=p), name=name)

    if n <= 2:
        direct = _matrix_closure_order(matrices, n, p, cap)
        if direct != group.order:
            logger.error(
                "Vector action of %s is not faithful: %s matrices, %s permutations",
                name,
                direct,
                group.order,
            )
            raise InvariantViolated("matrix group and its vector action differ in order")

    logger.info("Built matrix group %s of order %s over F_%s", name or "<anonymous>", group.order, p)
    return group


def direct_product(G: FiniteGroup, H: FiniteGroup, *, cap: int | None = None) -> FiniteGroup:
    """
    G × H acting on the disjoint union of their points.
    """
    cap = resolve_cap(cap)
    if G.order * H.order > cap:
        raise CapExceeded(f"|G x H| = {G.order * H.order} exceeds the cap of {cap}")

    gens = [concat((g, H.identity)) for g in G.generators]
    gens += [concat((G.identity, h)) for h in H.generators]
    elements = (concat((x, y)) for x in G.elements for y in H.elements)
    name = f"{G.name}x{H.name}" if G.name and H.name else ""
    return assemble(G.degree + H.degree, gens, elements, name=name)


# subgroups
def subgroup(G: FiniteGroup, generators: Iterable[Sequence[int]], *, name: str = "") -> FiniteGroup:
    gens = tuple(dict.fromkeys(_require_members(G, generators)))
    elements = closure(G.degree, gens, G.order)
    return assemble(G.degree, gens, elements, matrix_tag=G.matrix_tag, name=name)


def subgroup_from_elements(G: FiniteGroup, elements: Iterable[Perm]) -> FiniteGroup:
    """
    Subgroup with a known element set; a small generating set is picked greedily.
    """
    element_set = frozenset(elements)
    gens, _ = _grow(G.degree, sorted(element_set), len(element_set))
    return assemble(G.degree, gens, element_set, matrix_tag=G.matrix_tag)


def trivial_subgroup(G: FiniteGroup) -> FiniteGroup:
    return assemble(G.degree, (), (G.identity,), matrix_tag=G.matrix_tag)


def is_abelian(G: FiniteGroup) -> bool:
    return all(
        mul(a, b) == mul(b, a)
        for i, a in enumerate(G.generators)
        for b in G.generators[i + 1 :]
    )


def is_normal(G: FiniteGroup, N: FiniteGroup) -> bool:
    return N <= G and all(conj(x, g) in N for g in G.generators for x in N.generators)


def normal_closure(G: FiniteGroup, seed: Iterable[Sequence[int]]) -> FiniteGroup:
    """
    Smallest normal subgroup of G containing ``seed``.
    """
    gens = [x for x in dict.fromkeys(_require_members(G, seed)) if x != G.identity]
    current = closure(G.degree, gens, G.order)
    pending = list(gens)
    while pending:
        x = pending.pop()
        for g in G.generators:
            y = conj(x, g)
            if y not in current:
                gens.append(y)
                pending.append(y)
                current = closure(G.degree, gens, G.order)
    return assemble(G.degree, gens, current, matrix_tag=G.matrix_tag)


def normalizer(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    return subgroup_from_elements(
        G, (g for g in G.elements if all(conj(h, g) in H for h in H.generators))
    )


def intersection(A: FiniteGroup, B: FiniteGroup) -> frozenset[Perm]:
    return A.element_set & B.element_set


def join(G: FiniteGroup, *parts: FiniteGroup) -> FiniteGroup:
    """
    Subgroup of G generated by the given subgroups.
    """
    gens, elements = _grow(
        G.degree, (g for part in parts for g in part.generators), G.order
    )
    return assemble(G.degree, gens, elements, matrix_tag=G.matrix_tag)


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[Perm, ...], ...]:
    seen: set[Perm] = set()
    classes = []
    for x in G.elements:
        if x in seen:
            continue
        orbit, frontier = {x}, [x]
        while frontier:
            next_frontier = []
            for y in frontier:
                for g in G.generators:
                    z = conj(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        next_frontier.append(z)
            frontier = next_frontier
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return tuple(classes)


def _canonical(groups: Iterable[FiniteGroup]) -> tuple[FiniteGroup, ...]:
    return tuple(sorted(groups, key=lambda N: (N.order, N.elements)))


@lru_cache(maxsize=512)
def normal_subgroups(G: FiniteGroup) -> tuple[FiniteGroup, ...]:
    """
    All normal subgroups, ascending by order then element list.

    Every normal subgroup is the join of the normal closures of the conjugacy
    classes it contains, so joining those closures until nothing new appears
    reaches all of them.
    """
    minimal: dict[frozenset, FiniteGroup] = {}
    for cls in conjugacy_classes(G):
        N = normal_closure(G, [cls[0]])
        minimal.setdefault(N.element_set, N)

    found = dict(minimal)
    frontier = list(found.values())
    while frontier:
        next_frontier = []
        for A in frontier:
            for B in minimal.values():
                if B <= A:
                    continue
                J = join(G, A, B)
                if J.element_set not in found:
                    found[J.element_set] = J
                    next_frontier.append(J)
        frontier = next_frontier

    logger.debug("%r has %s normal subgroups", G, len(found))
    return _canonical(found.values())


def maximal_normal_subgroups(G: FiniteGroup) -> tuple[FiniteGroup, ...]:
    proper = [N for N in normal_subgroups(G) if N.order < G.order]
    return tuple(
        N
        for N in proper
        if not any(N.order < M.order and N <= M for M in proper)
    )


@lru_cache(maxsize=256)
def all_subgroups(G: FiniteGroup) -> tuple[FiniteGroup, ...]:
    """
    Every subgroup, from the cyclic ones upwards by joins. Desk scale only.
    """
    cyclic: dict[frozenset, FiniteGroup] = {}
    for x in G.elements:
        C = closure(G.degree, [x], G.order)
        if C not in cyclic:
            gens = [x] if x != G.identity else []
            cyclic[C] = assemble(G.degree, gens, C, matrix_tag=G.matrix_tag)

    found = dict(cyclic)
    frontier = list(found.values())
    while frontier:
        next_frontier = []
        for A in frontier:
            for B in cyclic.values():
                if B <= A:
                    continue
                J = join(G, A, B)
                if J.element_set not in found:
                    found[J.element_set] = J
                    next_frontier.append(J)
        frontier = next_frontier
    return _canonical(found.values())


# quotients and homomorphisms
def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, G.generators, {x: x for x in G.elements})


def quotient(G: FiniteGroup, N: FiniteGroup) -> Quotient:
    """
    G/N as the permutation group of the right action on cosets. Cosets are
    numbered by their smallest element (the canonical representative).
    """
    if not is_normal(G, N):
        raise NotNormal(f"{N!r} is not a normal subgroup of {G!r}")

    if N.order == 1:
        return Quotient(group=G, projection=identity_hom(G), representatives=G.elements)

    coset_of: dict[Perm, int] = {}
    representatives: list[Perm] = []
    for x in G.elements:
        if x in coset_of:
            continue
        representatives.append(x)
        for n in N.elements:
            coset_of[mul(n, x)] = len(representatives)

    def action(g: Perm) -> Perm:
        return tuple(coset_of[mul(r, g)] for r in representatives)

    coset_elements = [action(r) for r in representatives]
    gens = tuple(action(g) for g in G.generators)
    name = f"{G.name}/N{N.order}" if G.name else ""
    Q = assemble(len(representatives), gens, coset_elements, name=name)
    table = {x: coset_elements[coset_of[x] - 1] for x in G.elements}
    return Quotient(
        group=Q,
        projection=GroupHom(G, Q, gens, table),
        representatives=tuple(representatives),
    )


def make_hom(
    domain: FiniteGroup, codomain: FiniteGroup, generator_images: Sequence[Sequence[int]]
) -> GroupHom:
    """
    Verifies a generator assignment through its graph subgroup: the pairs
    (g_i, image_i) generate a subgroup of domain × codomain, and the
    assignment is a homomorphism exactly when no domain element shows up with
    two different codomain partners.
    """
    if len(generator_images) != len(domain.generators):
        raise NotAHomomorphism(
            f"{len(domain.generators)} generators but {len(generator_images)} images"
        )
    images = tuple(_require_members(codomain, generator_images))
    pairs = list(zip(domain.generators, images))

    table = {domain.identity: codomain.identity}
    frontier = [(domain.identity, codomain.identity)]
    while frontier:
        next_frontier = []
        for x, y in frontier:
            for g, h in pairs:
                x2, y2 = mul(x, g), mul(y, h)
                known = table.get(x2)
                if known is None:
                    table[x2] = y2
                    next_frontier.append((x2, y2))
                elif known != y2:
                    raise NotAHomomorphism(
                        f"{list(x2)} would map to both {list(known)} and {list(y2)}",
                        witness=(x2, known, y2),
                    )
        frontier = next_frontier

    return GroupHom(domain, codomain, images, table)


def kernel(h: GroupHom) -> FiniteGroup:
    identity = h.codomain.identity
    return subgroup_from_elements(h.domain, (x for x, y in h.table.items() if y == identity))


def image(h: GroupHom) -> FiniteGroup:
    gens = tuple(dict.fromkeys(h.generator_images))
    elements = closure(h.codomain.degree, gens, h.codomain.order)
    return assemble(h.codomain.degree, gens, elements, matrix_tag=h.codomain.matrix_tag)


def image_of(h: GroupHom, S: FiniteGroup) -> FiniteGroup:
    return subgroup_from_elements(h.codomain, (h(x) for x in S.elements))


def is_surjective(h: GroupHom) -> bool:
    return len(set(h.table.values())) == h.codomain.order


def corestrict(h: GroupHom) -> GroupHom:
    """
    Same map with the codomain replaced by the image.
    """
    return GroupHom(h.domain, image(h), h.generator_images, h.table)


def restrict(h: GroupHom, H: FiniteGroup) -> GroupHom:
    return GroupHom(
        H, h.codomain, tuple(h(g) for g in H.generators), {x: h(x) for x in H.elements}
    )


def compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """
    g ∘ f (f first).
    """
    return GroupHom(
        f.domain,
        g.codomain,
        tuple(g(f(x)) for x in f.domain.generators),
        {x: g(y) for x, y in f.table.items()},
    )


# Sylow theory
def _is_power_element(x: Perm, p: int, exponent: int) -> bool:
    return x != identity_perm(len(x)) and power(x, exponent) == identity_perm(len(x))


def sylow(G: FiniteGroup, p: int) -> FiniteGroup:
    """
    One Sylow p-subgroup, grown from the trivial group: inside N_G(P) a
    non-Sylow P always has an element x outside P with x^p in P, and
    <P, x> has order p·|P|. The first such x in canonical order is taken.
    """
    _require_prime(p)
    target = p ** multiplicity(p, G.order)
    P = trivial_subgroup(G)
    while P.order < target:
        N = normalizer(G, P)
        x = next(x for x in N.elements if x not in P and power(x, p) in P)
        P = subgroup(G, P.generators + (x,))
    return P


def plus_subgroup(G: FiniteGroup, ell: int) -> FiniteGroup:
    """
    Subgroup generated by all ell-Sylow subgroups, i.e. by all elements of
    ell-power order. Always normal.
    """
    _require_prime(ell)
    exponent = ell ** multiplicity(ell, G.order)
    candidates = (x for x in G.elements if _is_power_element(x, ell, exponent))
    gens, elements = _grow(G.degree, candidates, G.order)
    return assemble(G.degree, gens, elements, matrix_tag=G.matrix_tag)


def frattini_check(H: FiniteGroup, I: FiniteGroup, p: int) -> FrattiniResult:
    """
    Checks H = I·N_H(P) for P a Sylow p-subgroup of the normal subgroup I.
    """
    if not is_normal(H, I):
        raise NotNormal(f"{I!r} is not normal in {H!r}")
    P = sylow(I, p)
    N = normalizer(H, P)
    product_order = I.order * N.order // len(intersection(I, N))
    holds = product_order == H.order
    if not holds:
        logger.error("Frattini argument failed for %r, %r, p=%s", H, I, p)
    return FrattiniResult(holds=holds, sylow=P, normalizer=N, product_order=product_order)


# simple factors
@lru_cache(maxsize=1024)
def identify_simple(order: int) -> SimpleFactorId:
    """
    Labels a simple group by its order: prime order means cyclic, otherwise
    the catalogues in every characteristic >= 5 dividing the order are searched.
    """
    if isprime(order):
        return SimpleFactorId(FactorKind.CYCLIC, order, (CyclicWitness(order),))

    witnesses = []
    for ell in primefactors(order):
        if ell >= 5:
            witnesses.extend(identify_simple_by_order(order, ell))

    if witnesses:
        return SimpleFactorId(
            FactorKind.LIE, order, tuple(witnesses), note="identified by order"
        )

    logger.warning("Simple group of order %s matches no catalogue entry", order)
    return SimpleFactorId(
        FactorKind.UNIDENTIFIED,
        order,
        note="order outside the catalogues of characteristic >= 5",
    )


def _factor_key(factor: SimpleFactorId) -> tuple:
    return factor.order, str(factor.kind)


def composition_series(G: FiniteGroup, rng: random.Random | None = None) -> tuple[FiniteGroup, ...]:
    """
    A chain G = G_0 > G_1 > ... > 1, each term maximal normal in the previous.
    Without ``rng`` the largest candidate (in canonical order) is taken.
    """
    series = [G]
    current = G
    while current.order > 1:
        candidates = maximal_normal_subgroups(current)
        current = rng.choice(candidates) if rng else candidates[-1]
        series.append(current)
    return tuple(series)


def composition_factors(G: FiniteGroup, rng: random.Random | None = None) -> tuple[SimpleFactorId, ...]:
    """
    Jordan–Hölder factors as a sorted multiset.
    """
    series = composition_series(G, rng)
    factors = (identify_simple(a.order // b.order) for a, b in pairwise(series))
    return tuple(sorted(factors, key=_factor_key))


def simple_quotients(G: FiniteGroup) -> tuple[SimpleFactorId, ...]:
    """
    Isomorphism labels of G/M over the maximal normal subgroups M.
    """
    labels = {identify_simple(G.order // M.order) for M in maximal_normal_subgroups(G)}
    return tuple(sorted(labels, key=_factor_key))


def belongs_to_sigma(factor: SimpleFactorId, ell: int) -> bool:
    if factor.kind == FactorKind.CYCLIC:
        return factor.order == ell
    return any(isinstance(w, LieTypeSpec) and w.ell == ell for w in factor.witnesses)


def lemma1_check(G: FiniteGroup, ell: int) -> Lemma1Report:
    """
    Every composition factor must be cyclic or lie in the family of
    characteristic ``ell``; factors of order divisible by ``ell`` must lie in it.
    """
    factors = composition_factors(G)
    outside = tuple(
        f for f in factors if f.kind != FactorKind.CYCLIC and not belongs_to_sigma(f, ell)
    )
    ell_divisible_outside = tuple(
        f for f in factors if f.order % ell == 0 and not belongs_to_sigma(f, ell)
    )
    return Lemma1Report(
        ell=ell,
        factors=factors,
        outside=outside,
        ell_divisible_outside=ell_divisible_outside,
    )
