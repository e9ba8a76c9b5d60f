"""Pure-Python edge-cover search kernel.

The problem handed to the kernel is already reduced to bitsets:

* ``m`` edges, bit ``e`` of a mask meaning edge ``e`` is covered;
* ``npairs`` vertex pairs, each usable at most once;
* candidates ``c`` = (``cand_pair[c]``, ``cand_mask[c]``), one per geodesic;
* ``edge_cands[e]`` = ids of the candidates whose path contains edge ``e``;
* ``pair_len[p]`` = length of any geodesic of pair ``p``.

The search always branches on the uncovered edge with the fewest live
candidates (lowest index on ties) and tries its candidates in id order.
Failed ``(covered, used)`` states are memoised up to ``MEMO_LIMIT`` entries.
The compiled kernel in ``_csearch.pyx`` follows exactly the same rules, so
both return the same witness and the same node count.

Pairs with too many geodesics to materialise are passed through ``lazy``;
that path is only available here.
"""

from __future__ import annotations

MEMO_LIMIT = 1 << 21


class _Exhausted(Exception):
    pass


def search(m, npairs, cand_pair, cand_mask, edge_cands, pair_len, budget, lazy=None):
    """Return ``(found, chosen, nodes)``.

    ``found`` is True, False, or None when ``budget`` node expansions ran out.
    ``chosen`` lists candidate ids (or ``(pair, path)`` tuples for lazy
    pairs) of the solution when one is found.

    ``lazy``, if given, is ``(through, expand)`` where ``through[e]`` lists
    ``(pair, count)`` for overflowed pairs with ``count`` geodesics through
    ``e``, and ``expand(pair, e)`` yields ``(mask, path)`` for them.
    """
    full = (1 << m) - 1
    through, expand = lazy if lazy else ([()] * m, None)
    failed = set()
    chosen = []
    nodes = 0
    total_len = sum(pair_len)

    def rec(covered, used, capacity):
        nonlocal nodes
        if covered == full:
            return True
        nodes += 1
        if nodes > budget:
            raise _Exhausted
        key = (covered, used)
        if key in failed:
            return False
        rest = full & ~covered
        if rest.bit_count() > capacity:
            if len(failed) < MEMO_LIMIT:
                failed.add(key)
            return False

        best_e, best_c = -1, -1
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            rest ^= low
            c = 0
            for ci in edge_cands[e]:
                if not (used >> cand_pair[ci]) & 1:
                    c += 1
            for p, cnt in through[e]:
                if not (used >> p) & 1:
                    c += cnt
            if best_e < 0 or c < best_c:
                best_e, best_c = e, c
                if c == 0:
                    break

        if best_c > 0:
            for ci in edge_cands[best_e]:
                p = cand_pair[ci]
                if (used >> p) & 1:
                    continue
                chosen.append(ci)
                if rec(covered | cand_mask[ci], used | (1 << p), capacity - pair_len[p]):
                    return True
                chosen.pop()
            for p, _ in through[best_e]:
                if (used >> p) & 1:
                    continue
                for mask, path in expand(p, best_e):
                    chosen.append((p, path))
                    if rec(covered | mask, used | (1 << p), capacity - pair_len[p]):
                        return True
                    chosen.pop()
        if len(failed) < MEMO_LIMIT:
            failed.add(key)
        return False

    try:
        found = rec(0, 0, total_len)
    except _Exhausted:
        return None, [], nodes
    return found, (chosen if found else []), nodes
