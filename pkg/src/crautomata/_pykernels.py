"""Pure-Python search kernels.

Reference implementation of the functions compiled in ``_ckernels.pyx``; the
two modules expose the same names and must return identical results.

Count vectors are packed into an int with two bits per state (state ``q``
occupies bits ``2q`` and ``2q+1``), holding the preimage multiplicity of
``q`` capped at 2.  State subsets are bitmasks.
"""

FIELD = 3


def cv_identity(n):
    code = 0
    for q in range(n):
        code |= 1 << (2 * q)
    return code


def cv_defect(code, n):
    d = 0
    for q in range(n):
        if not (code >> (2 * q)) & FIELD:
            d += 1
    return d


def cv_step(code, row, n):
    acc = [0] * n
    for q in range(n):
        c = (code >> (2 * q)) & FIELD
        if c:
            acc[row[q]] += c
    out = 0
    for p in range(n):
        v = acc[p]
        if v:
            out |= (2 if v > 1 else 1) << (2 * p)
    return out


def explore(table, n, queue, parent, cap):
    """Breadth-first closure of ``queue`` under every letter.

    ``parent`` maps each discovered code to ``(predecessor, letter)`` and is
    updated in place.  Successors whose defect exceeds ``cap`` are recorded in
    ``parent`` but not expanded.  Returns ``(discovered, suspended)`` in
    discovery order.
    """
    discovered = []
    suspended = []
    queue = list(queue)
    head = 0
    while head < len(queue):
        code = queue[head]
        head += 1
        for a, row in enumerate(table):
            nxt = cv_step(code, row, n)
            if nxt in parent:
                continue
            parent[nxt] = (code, a)
            discovered.append(nxt)
            if cv_defect(nxt, n) <= cap:
                queue.append(nxt)
            else:
                suspended.append(nxt)
    return discovered, suspended


def image_mask(mask, row):
    out = 0
    q = 0
    while mask:
        if mask & 1:
            out |= 1 << row[q]
        mask >>= 1
        q += 1
    return out


def _byte_tables(row, n):
    tables = []
    for base in range(0, n, 8):
        width = min(8, n - base)
        t = [0] * 256
        for b in range(1, 1 << width):
            low = b & -b
            t[b] = t[b ^ low] | (1 << row[base + low.bit_length() - 1])
        tables.append(t)
    return tables


def subset_closure(table, n, start):
    """BFS over the power automaton from ``start``.

    Returns a dict mapping every reachable mask to ``(predecessor, letter)``;
    the start mask maps to ``(-1, -1)``.
    """
    chunked = [_byte_tables(row, n) for row in table]
    parent = {start: (-1, -1)}
    queue = [start]
    head = 0
    while head < len(queue):
        mask = queue[head]
        head += 1
        for a, tables in enumerate(chunked):
            out = 0
            m = mask
            for t in tables:
                out |= t[m & 0xFF]
                m >>= 8
            if out not in parent:
                parent[out] = (mask, a)
                queue.append(out)
    return parent
