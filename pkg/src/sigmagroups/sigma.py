"""Prime-partition (sigma) machinery and the subgroup classes built on it.

A partition splits the primes into blocks.  Two spellings exist:

- listed: finitely many explicit blocks, e.g. ``[2,3][5]``; primes not listed
  fall into one implicit "rest" block
- classical: ``sigma1``, every prime alone in its own block

All class predicates take the ambient group together with a partition and
answer deterministically; expensive intermediates (per-block Hall subgroup
classes, permutability verdicts) are memoised on the interned group instance
keyed by the partition text.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import CapacityError, DEFAULT_LIMITS, GroupInputError, Limits
from .numbers import is_prime, part_for_primes, primes_of
from .permcore import (PermGroup, Subgroup, compose_images, identity_images,
                       interned)
from .structure import (all_subgroups, chief_series, conjugate_image_sets,
                        is_normal, normal_subgroups, quotient_group,
                        subgroup_from_images)

# ---------------------------------------------------------------------------
# partitions

@dataclass(frozen=True)
class SigmaPartition:
    """A partition of the primes: explicit blocks plus an implicit rest block,
    or the classical one-prime-per-block partition."""

    blocks: tuple[frozenset[int], ...] = ()
    classical: bool = False

    REST = "rest"

    def __post_init__(self):
        if self.classical and self.blocks:
            raise GroupInputError("classical partition carries no explicit blocks")
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise GroupInputError("empty block in partition")
            for p in block:
                if not is_prime(p):
                    raise GroupInputError(f"{p} is not a prime")
                if p in seen:
                    raise GroupInputError(f"prime {p} appears in two blocks")
                seen.add(p)
        ordered = tuple(sorted(self.blocks, key=min))
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def sigma1(cls) -> "SigmaPartition":
        return cls(blocks=(), classical=True)

    @classmethod
    def of_blocks(cls, *blocks) -> "SigmaPartition":
        return cls(blocks=tuple(frozenset(b) for b in blocks))

    def block_id(self, p: int) -> str:
        """Stable textual id of the block containing prime p."""
        if not is_prime(p):
            raise GroupInputError(f"{p} is not a prime")
        if self.classical:
            return str(p)
        for block in self.blocks:
            if p in block:
                return ",".join(str(q) for q in sorted(block))
        return self.REST
    def block_primes(self, p: int) -> frozenset[int] | None:
        """The full prime set of p's block; None for the (infinite) rest block."""
        if self.classical:
            return frozenset({p})
        for block in self.blocks:
            if p in block:
                return block
        return None

    def same_block(self, p: int, q: int) -> bool:
        return self.block_id(p) == self.block_id(q)

    def text(self) -> str:
        if self.classical:
            return "sigma1"
        if not self.blocks:
            return "[]"
        return "".join("[" + ",".join(str(p) for p in sorted(b)) + "]" for b in self.blocks)

    def __str__(self) -> str:
        return self.text()


def parse_sigma(text: str) -> SigmaPartition:
    """Parse ``sigma1`` or listed-block text like ``[2,3][5]``."""
    s = text.strip().lower()
    if s == "sigma1":
        return SigmaPartition.sigma1()
    if s == "[]":
        return SigmaPartition()
    if not re.fullmatch(r"(\[\d+(?:\s*,\s*\d+)*\])+", s):
        raise GroupInputError(f"bad partition text {text!r}")
    blocks = []
    for body in re.findall(r"\[([^\]]*)\]", s):
        blocks.append(frozenset(int(tok) for tok in re.split(r"\s*,\s*", body)))
    return SigmaPartition.of_blocks(*blocks)


def sigma_of_int(n: int, sigma: SigmaPartition) -> frozenset[str]:
    """Block ids met by the primes of n."""
    return frozenset(sigma.block_id(p) for p in primes_of(n))


def sigma_of_group(G: PermGroup, sigma: SigmaPartition) -> frozenset[str]:
    return sigma_of_int(G.order, sigma)


def is_sigma_primary(n: int, sigma: SigmaPartition) -> bool:
    return len(sigma_of_int(n, sigma)) <= 1


# ---------------------------------------------------------------------------
# per-block Hall data

def _sigma_key(sigma: SigmaPartition) -> str:
    return sigma.text()


def _group_blocks(G: PermGroup, sigma: SigmaPartition) -> list[tuple[str, frozenset[int], int]]:
    """(block id, primes of the block inside pi(G), sigma_i-part of |G|),
    ordered by least prime."""
    by_id: dict[str, set[int]] = {}
    for p in sorted(primes_of(G.order)):
        by_id.setdefault(sigma.block_id(p), set()).add(p)
    out = [(bid, frozenset(ps), part_for_primes(G.order, ps)) for bid, ps in by_id.items()]
    out.sort(key=lambda t: min(t[1]))
    return out


def _hall_data(G: PermGroup, sigma: SigmaPartition, limits: Limits):
    """Per block: all Hall subgroup element sets and their conjugacy classes."""
    K = interned(G)
    key = ("hall-data", _sigma_key(sigma))
    if key not in K.cache:
        blocks = []
        for bid, ps, part in _group_blocks(K, sigma):
            cands = [h for h in all_subgroups(K, limits) if h.order == part]
            cand_sets = [h.element_images() for h in cands]
            gens_by_set = {h.element_images(): h.generators for h in cands}
            classes: list[tuple[frozenset, ...]] = []
            unassigned = set(cand_sets)
            for cset in sorted(cand_sets, key=lambda s: tuple(sorted(s))):
                if cset not in unassigned:
                    continue
                orbit = conjugate_image_sets(K, cset, [g.images for g in gens_by_set[cset]])
                for o in orbit:
                    unassigned.discard(o)
                classes.append(tuple(sorted(orbit, key=lambda s: tuple(sorted(s)))))
            blocks.append({
                "id": bid,
                "primes": ps,
                "part": part,
                "candidates": tuple(sorted(cand_sets, key=lambda s: tuple(sorted(s)))),
                "classes": tuple(classes),
            })
        K.cache[key] = blocks
    return K.cache[key]


@dataclass(frozen=True)
class HallSigmaSet:
    """One Hall subgroup per block of sigma(G); empty for the trivial group."""

    members: tuple[tuple[str, Subgroup], ...]

    def member_orders(self) -> tuple[int, ...]:
        return tuple(h.order for _, h in self.members)


def complete_hall_sigma_set(G: PermGroup, sigma: SigmaPartition,
                            limits: Limits = DEFAULT_LIMITS) -> HallSigmaSet | None:
    """Canonical complete Hall sigma-set (least member per block), or None."""
    members = []
    total = 1
    for block in _hall_data(G, sigma, limits):
        if not block["candidates"]:
            return None
        least = block["candidates"][0]
        sub = subgroup_from_images(G, least)
        members.append((block["id"], sub))
        total *= sub.order
    assert total == G.order, "Hall sigma-set member orders must multiply to |G|"
    return HallSigmaSet(members=tuple(members))


def has_complete_hall_sigma_set(G: PermGroup, sigma: SigmaPartition,
                                limits: Limits = DEFAULT_LIMITS) -> bool:
    return complete_hall_sigma_set(G, sigma, limits) is not None


def enumerate_complete_hall_sigma_sets(G: PermGroup, sigma: SigmaPartition,
                                       limits: Limits = DEFAULT_LIMITS) -> tuple[HallSigmaSet, ...]:
    """Every complete Hall sigma-set, as the cartesian product over blocks."""
    blocks = _hall_data(G, sigma, limits)
    count = 1
    for block in blocks:
        count *= len(block["candidates"])
    if count > limits.hall_set_cap:
        raise CapacityError(
            f"{count} complete Hall sigma-sets exceed the Hall-set cap {limits.hall_set_cap}")
    if any(not block["candidates"] for block in blocks):
        return ()
    out = []
    for combo in itertools.product(*(block["candidates"] for block in blocks)):
        members = tuple(
            (block["id"], subgroup_from_images(G, cset))
            for block, cset in zip(blocks, combo))
        out.append(HallSigmaSet(members=members))
    return tuple(out)


# ---------------------------------------------------------------------------
# sigma-permutability

def _product_sets_equal(aset: frozenset[tuple], bset: frozenset[tuple]) -> bool:
    """AB == BA as element sets, with early exit."""
    if aset <= bset or bset <= aset:
        return True
    ab = {compose_images(a, b) for a in aset for b in bset}
    for b in bset:
        for a in aset:
            if compose_images(b, a) not in ab:
                return False
    return True


def is_sigma_permutable(G: PermGroup, A: Subgroup, sigma: SigmaPartition,
                        limits: Limits = DEFAULT_LIMITS) -> bool:
    """Does some complete Hall sigma-set H of G satisfy A.H^x == H^x.A for
    every member H and every x in G?

    The choice of member only matters through its conjugacy class (the
    condition ranges over all conjugates), and blocks are independent, so the
    existential over complete Hall sigma-sets factors into one existential
    over conjugacy classes per block.  No complete Hall sigma-set means no
    subgroup is sigma-permutable.
    """
    K = interned(G)
    aset = A.element_images()
    key = ("sigma-perm", _sigma_key(sigma), aset)
    if key not in K.cache:
        verdict = True
        for block in _hall_data(K, sigma, limits):
            if not block["candidates"]:
                verdict = False
                break
            if not any(
                    all(_product_sets_equal(aset, wset) for wset in cls)
                    for cls in block["classes"]):
                verdict = False
                break
        K.cache[key] = verdict
    return K.cache[key]


def sigma_permutable_sets(G: PermGroup, sigma: SigmaPartition,
                          limits: Limits = DEFAULT_LIMITS) -> dict[frozenset, Subgroup]:
    """Element set -> subgroup, for every sigma-permutable subgroup of G."""
    out = {}
    for h in all_subgroups(G, limits):
        if is_sigma_permutable(G, h, sigma, limits):
            out[h.element_images()] = h
    return out


def psigma_t_violation(G: PermGroup, sigma: SigmaPartition,
                       limits: Limits = DEFAULT_LIMITS) -> tuple[Subgroup, Subgroup] | None:
    """A chain (K, H) with K sigma-permutable in H, H sigma-permutable in G,
    K not sigma-permutable in G; None when transitivity holds throughout."""
    K = interned(G)
    key = ("psigma-t", _sigma_key(sigma))
    if key in K.cache:
        cached = K.cache[key]
        if cached is None:
            return None
        hgens, kgens = cached
        return (Subgroup(G, kgens), Subgroup(G, hgens))
    sp_g = sigma_permutable_sets(K, sigma, limits)
    result = None
    for hset in sorted(sp_g, key=lambda s: (len(s), tuple(sorted(s)))):
        if len(hset) == K.order or len(hset) == 1:
            continue
        h_sub = sp_g[hset]
        h_group = h_sub.as_group()
        sp_h = sigma_permutable_sets(h_group, sigma, limits)
        for kset in sorted(sp_h, key=lambda s: (len(s), tuple(sorted(s)))):
            if kset not in sp_g:
                result = (h_sub.generators, sp_h[kset].generators)
                break
        if result:
            break
    K.cache[key] = result
    if result is None:
        return None
    hgens, kgens = result
    return (Subgroup(G, kgens), Subgroup(G, hgens))


def is_psigma_t(G: PermGroup, sigma: SigmaPartition, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Transitivity of sigma-permutability: K sp H sp G implies K sp G.

    Vacuously true when G has no complete Hall sigma-set (nothing is
    sigma-permutable then); pair with has_complete_hall_sigma_set to audit.
    """
    return psigma_t_violation(G, sigma, limits) is None


# ---------------------------------------------------------------------------
# sigma-soluble / sigma-nilpotent / residual

def is_sigma_soluble(G: PermGroup, sigma: SigmaPartition,
                     limits: Limits = DEFAULT_LIMITS) -> bool:
    """Every chief factor is sigma-primary.  Chief factor orders do not depend
    on the chosen series, so one greedy series decides."""
    K = interned(G)
    key = ("sigma-soluble", _sigma_key(sigma))
    if key not in K.cache:
        K.cache[key] = all(
            is_sigma_primary(f.order, sigma) for f in chief_series(K, limits))
    return K.cache[key]


def is_sigma_nilpotent(G: PermGroup, sigma: SigmaPartition,
                       limits: Limits = DEFAULT_LIMITS) -> bool:
    """G is the direct product of sigma-primary groups; equivalently each
    block of sigma(G) is covered by a normal Hall subgroup (then automatically
    unique, and the orders multiply to |G|)."""
    K = interned(G)
    key = ("sigma-nilpotent", _sigma_key(sigma))
    if key not in K.cache:
        normal_orders = {n.order for n in normal_subgroups(K, limits)}
        K.cache[key] = all(
            part in normal_orders for _, _, part in _group_blocks(K, sigma))
    return K.cache[key]


def _quotient_is_sigma_nilpotent(G: PermGroup, n_sub: Subgroup, sigma: SigmaPartition,
                                 limits: Limits) -> bool:
    if n_sub.order == G.order:
        return True
    if n_sub.order == 1:
        return is_sigma_nilpotent(G, sigma, limits)
    q = quotient_group(G, n_sub, limits)
    return is_sigma_nilpotent(q.group, sigma, limits)


def sigma_nilpotent_residual(G: PermGroup, sigma: SigmaPartition,
                             limits: Limits = DEFAULT_LIMITS) -> Subgroup:
    """Least normal subgroup with sigma-nilpotent quotient.  The minimal-order
    witness and the intersection of all witnesses must agree (asserted)."""
    K = interned(G)
    key = ("sigma-residual", _sigma_key(sigma))
    if key not in K.cache:
        witnesses = [
            n for n in normal_subgroups(K, limits)
            if _quotient_is_sigma_nilpotent(K, n, sigma, limits)]
        least = min(witnesses, key=lambda n: (n.order, tuple(sorted(n.element_images()))))
        meet = set(K.element_images())
        for n in witnesses:
            meet &= n.element_images()
        assert frozenset(meet) == least.element_images(), \
            "residual: minimal witness differs from intersection of witnesses"
        K.cache[key] = least.generators
    return Subgroup(G, K.cache[key])


# ---------------------------------------------------------------------------
# Hall coverage (sigma-full of Sylow type), separability, odds and ends

def sigma_full_sylow_type_violation(G: PermGroup, sigma: SigmaPartition,
                                    limits: Limits = DEFAULT_LIMITS) -> dict | None:
    """First subgroup E and block failing the Hall coverage property: E must
    own a Hall sigma_i-subgroup whose conjugates absorb every sigma_i-subgroup
    of E.  None when every subgroup passes every block."""
    K = interned(G)
    key = ("sigma-full", _sigma_key(sigma))
    if key not in K.cache:
        violation = None
        for e_sub in all_subgroups(K, limits):
            e_group = e_sub.as_group()
            for block in _hall_data(e_group, sigma, limits):
                if not block["candidates"]:
                    violation = {"subgroup": e_sub.generators, "block": block["id"],
                                 "missing_hall": True}
                    break
                wset = block["candidates"][0]
                wgens = [g.images for g in subgroup_from_images(e_group, wset).generators]
                conjugates = conjugate_image_sets(e_group, wset, wgens)
                for cand in all_subgroups(e_group, limits):
                    if primes_of(cand.order) <= block["primes"] and cand.order > 1:
                        cset = cand.element_images()
                        if not any(cset <= c for c in conjugates):
                            violation = {"subgroup": e_sub.generators,
                                         "block": block["id"],
                                         "uncovered": cand.generators}
                            break
                if violation:
                    break
            if violation:
                break
        K.cache[key] = violation
    return K.cache[key]


def is_sigma_full_sylow_type(G: PermGroup, sigma: SigmaPartition,
                             limits: Limits = DEFAULT_LIMITS) -> bool:
    return sigma_full_sylow_type_violation(G, sigma, limits) is None


def is_pi_separable(G: PermGroup, pi, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Every chief factor is a pi-group or a pi'-group."""
    pi = frozenset(pi)
    return all(
        f.prime_support <= pi or not (f.prime_support & pi)
        for f in chief_series(G, limits))


def largest_normal_block_subgroup(D: Subgroup, block_primes,
                                  limits: Limits = DEFAULT_LIMITS) -> Subgroup:
    """O_{sigma_i}(D): the largest normal subgroup of D supported on the block."""
    block_primes = frozenset(block_primes)
    d_group = D.as_group()
    cands = [n for n in normal_subgroups(d_group, limits)
             if primes_of(n.order) <= block_primes]
    best = max(cands, key=lambda n: n.order)
    for n in cands:
        assert n.element_images() <= best.element_images(), \
            "normal block subgroups must join into the largest one"
    return subgroup_from_images(D.ambient, best.element_images())


def induces_power_automorphisms(G: PermGroup, D: Subgroup,
                                limits: Limits = DEFAULT_LIMITS) -> bool:
    """Does conjugation by every element of G map each d in D to a power of d?
    The elements acting as power automorphisms form a subgroup, so checking
    the generators of G suffices."""
    if not is_normal(G, D):
        raise GroupInputError("power-automorphism check requires a normal subgroup")
    powers_of: dict[tuple, frozenset] = {}
    for d in D.element_images():
        acc = [d]
        cur = d
        ident = identity_images(G.degree)
        while cur != ident:
            cur = compose_images(cur, d)
            acc.append(cur)
        powers_of[d] = frozenset(acc)
    for g in G.generators:
        gi = g.inverse().images
        for d in D.element_images():
            conj = compose_images(compose_images(gi, d), g.images)
            if conj not in powers_of[d]:
                return False
    return True
