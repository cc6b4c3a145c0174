"""Pure-Python integer kernels (reference implementation and import fallback).

Points of ``[±n]`` are encoded as indices ``0..2n-1`` in the order
``-n < ... < -1 < 1 < ... < n``, so the bar involution is ``i -> 2n-1-i``.
A matching is a ``partner`` sequence with ``partner[i] == -1`` for singletons.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
"""


def compose(a, b):
    """Signed permutation ``a∘b`` on image tuples (``b`` is applied first)."""
    out = []
    for x in b:
        if x > 0:
            out.append(a[x - 1])
        else:
            out.append(-a[-x - 1])
    return tuple(out)


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a, 1):
        if x > 0:
            out[x - 1] = i
        else:
            out[-x - 1] = -i
    return tuple(out)


def cycle_lengths(img):
    """Lengths of positive cycles (one per bar-pair, fixpoints included) and
    half-lengths of negative cycles of a signed permutation."""
    n = len(img)
    seen = [False] * (n + 1)
    pos = []
    neg = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        cur = start
        negative = False
        # follow cur -> img(cur) on [±n] until we come back to +start or hit -start
        while True:
            seen[abs(cur)] = True
            length += 1
            v = img[abs(cur) - 1]
            nxt = v if cur > 0 else -v
            if nxt == start:
                break
            if nxt == -start:
                negative = True
                break
            cur = nxt
        if negative:
            neg.append(length)
        else:
            pos.append(length)
    pos.sort(reverse=True)
    neg.sort(reverse=True)
    return tuple(pos), tuple(neg)


def hat_partner(partner):
    """Non-crossing matching attached to a symmetric pair partition."""
    m = len(partner)
    n = m // 2
    hat = [-1] * m
    stack = []
    for i in range(n):
        p = partner[i]
        if p > i and p < m - 1 - i:
            stack.append(i)
        elif stack:
            j = stack.pop()
            hat[j] = i
            hat[i] = j
            hat[m - 1 - i] = m - 1 - j
            hat[m - 1 - j] = m - 1 - i
    return hat


def sym_cycle_stats(partner):
    """Cycle statistics of a symmetric pair partition.

    Returns ``(c_minus, c, l_c, l_sc, semis)`` where ``semis`` lists
    ``(l, r)`` index pairs, one per half of each semi-cycle.
    """
    m = len(partner)
    hat = hat_partner(partner)
    seen = [False] * m
    c_minus = c = l_c = l_sc = 0
    semis = []
    for s in range(m):
        if seen[s] or (partner[s] >= 0 and hat[s] >= 0):
            continue
        seen[s] = True
        cur = s
        use_pi = partner[s] >= 0
        k = 0
        path = [s]
        while True:
            nxt = partner[cur] if use_pi else hat[cur]
            if nxt < 0:
                break
            if use_pi:
                k += 1
            cur = nxt
            seen[cur] = True
            path.append(cur)
            use_pi = not use_pi
        if cur == s:
            left = right = s
        elif partner[cur] < 0 and partner[s] >= 0:
            left, right = cur, s
        elif partner[s] < 0 and partner[cur] >= 0:
            left, right = s, cur
        else:
            raise ValueError("semi-cycle without a unique singleton end")
        for v in path:
            seen[m - 1 - v] = True
        semis.append((left, right))
        semis.append((m - 1 - left, m - 1 - right))
        l_sc += k
    for s in range(m):
        if seen[s]:
            continue
        cur = s
        k = 0
        members = []
        while True:
            members.append(cur)
            cur = partner[cur]
            members.append(cur)
            k += 1
            cur = hat[cur]
            if cur == s:
                break
        for v in members:
            seen[v] = True
        c += 1
        if seen[m - 1 - s]:
            c_minus += 1
            l_c += k // 2 - 1
        else:
            for v in members:
                seen[m - 1 - v] = True
            l_c += k - 1
    semis.sort(key=lambda lr: lr[1])
    return c_minus, c, l_c, l_sc, semis


def matching_cycles(partner):
    """Number of cycles of a perfect matching glued to the non-crossing
    matching with the same set of left legs."""
    m = len(partner)
    hat = [-1] * m
    stack = []
    for i in range(m):
        if partner[i] > i:
            stack.append(i)
        else:
            j = stack.pop()
            hat[i] = j
            hat[j] = i
    seen = [False] * m
    cycles = 0
    for s in range(m):
        if seen[s]:
            continue
        cycles += 1
        cur = s
        while True:
            seen[cur] = True
            cur = partner[cur]
            seen[cur] = True
            cur = hat[cur]
            if cur == s:
                break
    return cycles


def drake_counts(partner):
    """``(non_nested, no_right_crossing)`` pair counts of a perfect matching."""
    pairs = [(i, p) for i, p in enumerate(partner) if p > i]
    non_nested = 0
    no_right = 0
    for i, j in pairs:
        nested = False
        crossed = False
        for a, b in pairs:
            if a < i and j < b:
                nested = True
            if i < a < j < b:
                crossed = True
        non_nested += not nested
        no_right += not crossed
    return non_nested, no_right


def int_psd(A):
    """PSD test for a symmetric integer matrix (list of lists, modified in place).

    Fraction-free symmetric elimination with the pivot on the largest
    remaining diagonal entry.
    """
    n = len(A)
    active = list(range(n))
    prev = 1
    while active:
        k = max(active, key=lambda i: A[i][i])
        p = A[k][k]
        if p < 0:
            return False
        active.remove(k)
        if p == 0:
            # every remaining diagonal entry is <= 0: PSD needs the block to vanish
            return all(A[k][j] == 0 for j in active) and all(A[i][j] == 0 for i in active for j in active)
        rowk = A[k]
        for i in active:
            aik = rowk[i]
            Ai = A[i]
            if aik:
                for j in active:
                    Ai[j] = (p * Ai[j] - aik * rowk[j]) // prev
            else:
                for j in active:
                    Ai[j] = (p * Ai[j]) // prev
        prev = p
    return True
