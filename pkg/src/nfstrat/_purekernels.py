"""Pure-Python indexing kernels over flat atom arrays.

Every function takes parallel lists ``kinds``, ``lefts``, ``rights`` (one
entry per atom, kind 1 = membership, 0 = equality, variables as ids in
``range(nvars)``).  Occurrence indices come back interleaved:
``[atom0.left, atom0.right, atom1.left, ...]``.

``_ckernels.pyx`` mirrors these signatures; keep the two in step.
"""

from itertools import product


def _next_atom(done, lefts, rights, highest):
    # first unindexed atom sharing a variable with the indexed prefix,
    # else the first unindexed atom
    first = -1
    for a, finished in enumerate(done):
        if finished:
            continue
        if first < 0:
            first = a
        if highest[lefts[a]] or highest[rights[a]]:
            return a
    return first


def canonical_indices(kinds, lefts, rights, nvars):
    k = len(kinds)
    start = 2 * k
    out = [0] * (2 * k)
    highest = [0] * nvars  # 0 = not yet indexed; real indices are >= 1
    done = [False] * k
    for _ in range(k):
        a = _next_atom(done, lefts, rights, highest)
        lv, rv, step = lefts[a], rights[a], kinds[a]
        if highest[lv]:
            li = highest[lv]
            ri = li + step
        elif highest[rv]:
            ri = highest[rv]
            li = ri - step
        else:
            li = start
            ri = li + step
        out[2 * a] = li
        out[2 * a + 1] = ri
        if li > highest[lv]:
            highest[lv] = li
        if ri > highest[rv]:
            highest[rv] = ri
        done[a] = True
    return out


def acyclic_indices(kinds, lefts, rights, nvars):
    k = len(kinds)
    out = [0] * (2 * k)
    highest = [0] * nvars
    done = [False] * k
    for _ in range(k):
        a = _next_atom(done, lefts, rights, highest)
        lv, rv = lefts[a], rights[a]
        hl, hr = highest[lv], highest[rv]
        if hl == 0 and hr == 0:
            li, ri = 1, 2
        elif hl >= hr:
            li, ri = hl, hl + 1
        else:
            li, ri = hr + 1, hr
        out[2 * a] = li
        out[2 * a + 1] = ri
        if li > highest[lv]:
            highest[lv] = li
        if ri > highest[rv]:
            highest[rv] = ri
        done[a] = True
    return out


def rng_total(lefts, rights, indices, nvars):
    seen = [set() for _ in range(nvars)]
    for a in range(len(lefts)):
        seen[lefts[a]].add(indices[2 * a])
        seen[rights[a]].add(indices[2 * a + 1])
    return sum(len(s) for s in seen)


def min_rng_bruteforce(kinds, lefts, rights, nvars, bound):
    """Minimum total rng over every rule-conforming indexing in ``[0, bound]``.

    Membership atoms take ``(a, a + 1)``, equality atoms ``(a, a)``; each atom
    picks its own ``a`` independently.
    """
    choices = [range(bound) if kind else range(bound + 1) for kind in kinds]
    best = None
    k = len(kinds)
    for bases in product(*choices):
        masks = [0] * nvars
        for a in range(k):
            b = bases[a]
            masks[lefts[a]] |= 1 << b
            masks[rights[a]] |= 1 << (b + kinds[a])
        total = sum(bin(m).count("1") for m in masks)
        if best is None or total < best:
            best = total
    return best
