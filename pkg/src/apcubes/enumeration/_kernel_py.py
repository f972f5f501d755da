"""Pure-Python search kernel; same contract as the compiled ``_kernel``."""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def enumerate_block(t, first):
    """Depth-first search over vectors whose first entry index is in ``first``.

    Returns ``(rows, depth)``: an int64 array of entry-index rows in
    lexicographic order, and ``depth[p]`` = number of accepted prefixes of
    length ``p + 1`` (prefixes still missing the forced last entry).
    """
    L = t.k - 1
    n = t.n_values
    pos = t.positions.tolist()
    codes = t.codes.tolist()
    code_to_idx = t.code_to_idx.tolist()
    add = t.add.tolist()
    neg = t.neg.tolist()
    # compat_rows[p][q][a] = set of b compatible with a placed at q when b goes at p
    compat = t.compat
    ok = [[compat[pos[p] - pos[q]].tolist() if q < p else None for q in range(L)] for p in range(L)]
    rows: list[list[int]] = []
    chosen = [0] * L
    cls = [0] * L  # running product class after position p
    last = L - 1
    nodes = [0] * last

    def candidates(p):
        out = []
        oks = ok[p]
        for b in range(n):
            for q in range(p):
                if not oks[q][chosen[q]][b]:
                    break
            else:
                out.append(b)
        return out

    def close():
        b = code_to_idx[neg[cls[last - 1]]]
        oks = ok[last]
        for q in range(last):
            if not oks[q][chosen[q]][b]:
                return
        chosen[last] = b
        rows.append(chosen.copy())

    def descend(p):
        for b in candidates(p):
            chosen[p] = b
            cls[p] = add[cls[p - 1]][codes[b]]
            nodes[p] += 1
            if p + 1 == last:
                close()
            else:
                descend(p + 1)

    for a in first:
        chosen[0] = a
        cls[0] = codes[a]
        nodes[0] += 1
        if last == 1:
            close()
        else:
            descend(1)
    return np.array(rows, dtype=np.int64).reshape(-1, L), np.array(nodes, dtype=np.int64)


def rank_zero_scan(t, rows):
    """First (lexicographic) eliminating triple per row, or -1."""
    codes = t.codes.tolist()
    add = t.add.tolist()
    in_list = t.in_list.tolist()
    triples = t.triples.tolist()
    tcodes = t.triple_codes.tolist()
    out = np.full(len(rows), -1, dtype=np.int64)
    for r, row in enumerate(rows.tolist()):
        c = [codes[b] for b in row]
        for q, (x, y, z) in enumerate(triples):
            if in_list[add[add[add[c[x]][c[y]]][c[z]]][tcodes[q]]]:
                out[r] = q
                break
    return out
