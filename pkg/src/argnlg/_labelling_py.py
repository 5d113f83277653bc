"""Pure-Python complete-labelling search (fallback for the compiled kernel).

Arguments are indices ``0..n-1``; ``attackers[i]`` is a bitmask of the
attackers of ``i``.  Each complete labelling is reported as a pair of
bitmasks ``(in_mask, out_mask)``; everything else is undec.
"""

from __future__ import annotations


def _propagate(attackers, n, full, lab_in, lab_out, lab_und):
    while True:
        changed = False
        must_out = 0
        m = lab_in
        while m:
            low = m & -m
            must_out |= attackers[low.bit_length() - 1]
            m ^= low
        if must_out & (lab_in | lab_und):
            return None
        if must_out & ~lab_out:
            lab_out |= must_out
            changed = True
        free = full & ~(lab_in | lab_out | lab_und)
        for x in range(n):
            bit = 1 << x
            att = attackers[x]
            if bit & lab_in:
                continue
            if bit & lab_out:
                if not (att & lab_in) and not (att & free):
                    return None
            elif bit & lab_und:
                if att & lab_in or not (att & ~lab_out):
                    return None
            elif att & lab_in:
                lab_out |= bit
                free &= ~bit
                changed = True
            elif not (att & ~lab_out):
                lab_in |= bit
                free &= ~bit
                changed = True
        if not changed:
            return lab_in, lab_out, lab_und


def complete_labellings(n: int, attackers: list[int]) -> list[tuple[int, int]]:
    full = (1 << n) - 1
    found: list[tuple[int, int]] = []

    def search(lab_in, lab_out, lab_und):
        state = _propagate(attackers, n, full, lab_in, lab_out, lab_und)
        if state is None:
            return
        lab_in, lab_out, lab_und = state
        free = full & ~(lab_in | lab_out | lab_und)
        if not free:
            found.append((lab_in, lab_out))
            return
        bit = free & -free
        search(lab_in | bit, lab_out, lab_und)
        search(lab_in, lab_out | bit, lab_und)
        search(lab_in, lab_out, lab_und | bit)

    search(0, 0, 0)
    return found
