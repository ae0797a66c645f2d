"""Pure-Python hot kernels (fallback for the compiled ``_ckernels``).

All kernels speak the same small vocabulary: a semigroup is a 0/1
membership ``window`` over ``[0, c)`` together with its conductor ``c``.
Working arrays used during tree walks are kept at 1 past the conductor.
"""

BACKEND = "python"


def _gens(arr, c, lo_only):
    # minimal generators of the node held in arr (arr[x] == 1 for x >= c)
    if c == 0:
        return [1]
    m = 1
    while not arr[m]:
        m += 1
    out = []
    start = c if lo_only else 1
    for x in range(start, c + m):
        if not arr[x]:
            continue
        ok = True
        for a in range(1, x // 2 + 1):
            if arr[a] and arr[x - a]:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def _invariants(arr, c):
    # (cm_type, colength) of the node held in arr
    if c == 0:
        return 1, 0
    F = c - 1
    ntype = 0
    for a in range(c):
        if arr[a]:
            continue
        ok = True
        for h in range(1, c - a):
            if arr[h] and not arr[a + h]:
                ok = False
                break
        if ok:
            ntype += 1
    omega = [0 if arr[F - x] else 1 for x in range(c)]
    K = [0] * c
    for z in range(c):
        if not arr[z]:
            continue
        ok = True
        for x in range(c - z):
            if omega[x] and not arr[z + x]:
                ok = False
                break
        if ok:
            K[z] = 1
    missing = 0
    for y in range(c):
        if not arr[y]:
            continue
        hit = False
        for z in range(y + 1):
            if K[z] and omega[y - z]:
                hit = True
                break
        if not hit:
            missing += 1
    return ntype, missing


def window_invariants(window, c):
    """Return ``(pf, trace)`` for the semigroup given by its window.

    ``trace`` is the 0/1 window of the trace ideal over ``[0, c)``.
    """
    if c == 0:
        return (-1,), b""
    arr = list(window[:c]) + [1] * (c + 1)
    F = c - 1
    pf = []
    for a in range(c):
        if arr[a]:
            continue
        if all(arr[a + h] for h in range(1, c - a) if arr[h]):
            pf.append(a)
    omega = [0 if arr[F - x] else 1 for x in range(c)]
    K = [z for z in range(c)
         if arr[z] and all(arr[z + x] for x in range(c - z) if omega[x])]
    trace = bytearray(c)
    for z in K:
        for x in range(c - z):
            if omega[x]:
                trace[z + x] = 1
    return tuple(pf), bytes(trace)


def scan_subtree(window, c, genus, genus_max):
    """Walk the semigroup tree below the given node up to ``genus_max``.

    Returns one tuple ``(window, c, genus, gens, cm_type, colength)`` per
    node, the starting node included.
    """
    size = 4 * genus_max + 4 + c
    arr = list(window[:c]) + [1] * (size - c)
    out = []

    def visit(c, g):
        gens = _gens(arr, c, False)
        ntype, col = _invariants(arr, c)
        out.append((bytes(arr[:c]), c, g, tuple(gens), ntype, col))
        if g >= genus_max:
            return
        for x in gens:
            if x < c:
                continue
            arr[x] = 0
            visit(x + 1, g + 1)
            arr[x] = 1

    visit(c, genus)
    return out


def search_symmetric(hwindow, hc, hgenus, d_max, node_limit):
    """Branch-and-bound over the tree for symmetric subsemigroups of H.

    Returns ``(best, witnesses, nodes, exhaustive)`` where ``best`` is the
    least colength ``|H ∖ N|`` found (``-1`` if none within ``d_max``) and
    ``witnesses`` lists every symmetric N at that colength as
    ``(window, c)`` pairs.
    """
    gmax = hgenus + d_max
    size = 4 * gmax + 4 + hc
    inH = [1] * (size + 1)
    for x in range(hc):
        inH[x] = hwindow[x]
    # suffix counts of H-gaps at or above each position
    gaps_from = [0] * (size + 2)
    for x in range(size, -1, -1):
        gaps_from[x] = gaps_from[x + 1] + (0 if inH[x] else 1)
    arr = [1] * (size + 1)
    state = {"best": -1, "bound": d_max, "nodes": 0, "complete": True}
    witnesses = []

    def visit(c, g):
        if state["nodes"] >= node_limit:
            state["complete"] = False
            return
        state["nodes"] += 1
        remaining = gaps_from[c] if c <= size else 0
        if g + remaining > hgenus + state["bound"]:
            return
        if remaining == 0 and 2 * g == c:
            d = g - hgenus
            if state["best"] < 0 or d < state["best"]:
                state["best"] = d
                state["bound"] = d
                witnesses.clear()
                witnesses.append((bytes(arr[:c]), c))
            elif d == state["best"]:
                witnesses.append((bytes(arr[:c]), c))
        for x in _gens(arr, c, True):
            # rule (ii): elements in [c, x) survive in every descendant
            if not all(inH[y] for y in range(c, x)):
                break
            arr[x] = 0
            visit(x + 1, g + 1)
            arr[x] = 1
            if not state["complete"]:
                return

    visit(0, 0)
    return state["best"], witnesses, state["nodes"], state["complete"]
