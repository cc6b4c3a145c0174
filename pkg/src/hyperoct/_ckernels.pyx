# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef int* _to_c(seq, Py_ssize_t m) except NULL:
    cdef int *buf = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(m):
        buf[i] = seq[i]
    return buf


def compose(a, b):
    cdef Py_ssize_t n = len(b), i
    cdef int *ca = _to_c(a, n)
    cdef int *cb = _to_c(b, n)
    cdef int x
    out = [0] * n
    try:
        for i in range(n):
            x = cb[i]
            if x > 0:
                out[i] = ca[x - 1]
            else:
                out[i] = -ca[-x - 1]
    finally:
        free(ca)
        free(cb)
    return tuple(out)


def inverse(a):
    cdef Py_ssize_t n = len(a), i
    cdef int *ca = _to_c(a, n)
    cdef int x
    out = [0] * n
    try:
        for i in range(n):
            x = ca[i]
            if x > 0:
                out[x - 1] = i + 1
            else:
                out[-x - 1] = -(i + 1)
    finally:
        free(ca)
    return tuple(out)


def cycle_lengths(img):
    cdef Py_ssize_t n = len(img)
    cdef int *ci = _to_c(img, n)
    cdef char *seen = <char*>malloc(n + 1)
    cdef int start, cur, nxt, length, v, negative
    pos = []
    neg = []
    try:
        for start in range(n + 1):
            seen[start] = 0
        for start in range(1, n + 1):
            if seen[start]:
                continue
            length = 0
            cur = start
            negative = 0
            while True:
                seen[cur if cur > 0 else -cur] = 1
                length += 1
                v = ci[(cur if cur > 0 else -cur) - 1]
                nxt = v if cur > 0 else -v
                if nxt == start:
                    break
                if nxt == -start:
                    negative = 1
                    break
                cur = nxt
            if negative:
                neg.append(length)
            else:
                pos.append(length)
    finally:
        free(ci)
        free(seen)
    pos.sort(reverse=True)
    neg.sort(reverse=True)
    return tuple(pos), tuple(neg)


cdef void _hat(int *partner, int *hat, int m) noexcept:
    cdef int n = m // 2
    cdef int i, j, p, top = 0
    cdef int *stack = <int*>malloc((n if n > 0 else 1) * sizeof(int))
    for i in range(m):
        hat[i] = -1
    for i in range(n):
        p = partner[i]
        if p > i and p < m - 1 - i:
            stack[top] = i
            top += 1
        elif top > 0:
            top -= 1
            j = stack[top]
            hat[j] = i
            hat[i] = j
            hat[m - 1 - i] = m - 1 - j
            hat[m - 1 - j] = m - 1 - i
    free(stack)


def hat_partner(partner):
    cdef Py_ssize_t m = len(partner), i
    cdef int *cp = _to_c(partner, m)
    cdef int *ch = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    try:
        _hat(cp, ch, <int>m)
        out = [ch[i] for i in range(m)]
    finally:
        free(cp)
        free(ch)
    return out


def sym_cycle_stats(partner):
    cdef int m = <int>len(partner)
    cdef int *cp = _to_c(partner, m)
    cdef int *ch = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    cdef char *seen = <char*>malloc(m if m > 0 else 1)
    cdef int *buf = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    cdef int s, cur, nxt, k, use_pi, left, right, blen, t
    cdef int c_minus = 0, c = 0, l_c = 0, l_sc = 0
    semis = []
    try:
        _hat(cp, ch, m)
        for s in range(m):
            seen[s] = 0
        for s in range(m):
            if seen[s] or (cp[s] >= 0 and ch[s] >= 0):
                continue
            seen[s] = 1
            cur = s
            use_pi = cp[s] >= 0
            k = 0
            blen = 0
            buf[blen] = s
            blen += 1
            while True:
                nxt = cp[cur] if use_pi else ch[cur]
                if nxt < 0:
                    break
                if use_pi:
                    k += 1
                cur = nxt
                seen[cur] = 1
                buf[blen] = cur
                blen += 1
                use_pi = not use_pi
            if cur == s:
                left = s
                right = s
            elif cp[cur] < 0 and cp[s] >= 0:
                left = cur
                right = s
            elif cp[s] < 0 and cp[cur] >= 0:
                left = s
                right = cur
            else:
                raise ValueError("semi-cycle without a unique singleton end")
            for t in range(blen):
                seen[m - 1 - buf[t]] = 1
            semis.append((left, right))
            semis.append((m - 1 - left, m - 1 - right))
            l_sc += k
        for s in range(m):
            if seen[s]:
                continue
            cur = s
            k = 0
            blen = 0
            while True:
                buf[blen] = cur
                blen += 1
                cur = cp[cur]
                buf[blen] = cur
                blen += 1
                k += 1
                cur = ch[cur]
                if cur == s:
                    break
            for t in range(blen):
                seen[buf[t]] = 1
            c += 1
            if seen[m - 1 - s]:
                c_minus += 1
                l_c += k // 2 - 1
            else:
                for t in range(blen):
                    seen[m - 1 - buf[t]] = 1
                l_c += k - 1
    finally:
        free(cp)
        free(ch)
        free(seen)
        free(buf)
    semis.sort(key=lambda lr: lr[1])
    return c_minus, c, l_c, l_sc, semis


def matching_cycles(partner):
    cdef int m = <int>len(partner)
    cdef int *cp = _to_c(partner, m)
    cdef int *ch = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    cdef int *stack = <int*>malloc((m if m > 0 else 1) * sizeof(int))
    cdef char *seen = <char*>malloc(m if m > 0 else 1)
    cdef int i, j, s, cur, top = 0, cycles = 0
    try:
        for i in range(m):
            ch[i] = -1
            seen[i] = 0
        for i in range(m):
            if cp[i] > i:
                stack[top] = i
                top += 1
            else:
                if top == 0:
                    raise ValueError("not a perfect matching")
                top -= 1
                j = stack[top]
                ch[i] = j
                ch[j] = i
        for s in range(m):
            if seen[s]:
                continue
            cycles += 1
            cur = s
            while True:
                seen[cur] = 1
                cur = cp[cur]
                seen[cur] = 1
                cur = ch[cur]
                if cur == s:
                    break
    finally:
        free(cp)
        free(ch)
        free(stack)
        free(seen)
    return cycles


def drake_counts(partner):
    cdef int m = <int>len(partner)
    cdef int *cp = _to_c(partner, m)
    cdef int i, j, a, b, nested, crossed
    cdef int non_nested = 0, no_right = 0
    try:
        for i in range(m):
            j = cp[i]
            if j <= i:
                continue
            nested = 0
            crossed = 0
            for a in range(m):
                b = cp[a]
                if b <= a:
                    continue
                if a < i and j < b:
                    nested = 1
                if i < a and a < j and j < b:
                    crossed = 1
            non_nested += 1 - nested
            no_right += 1 - crossed
    finally:
        free(cp)
    return non_nested, no_right


def int_psd(list A):
    cdef Py_ssize_t n = len(A), a, b, t, k, i, j, m
    cdef list active = list(range(n))
    cdef list rowk, Ai
    cdef object p, prev = 1, aik, best
    while active:
        m = len(active)
        k = active[0]
        best = (<list>A[k])[k]
        for t in range(1, m):
            i = active[t]
            if (<list>A[i])[i] > best:
                best = (<list>A[i])[i]
                k = i
        p = best
        if p < 0:
            return False
        active.remove(k)
        m -= 1
        rowk = <list>A[k]
        if p == 0:
            for a in range(m):
                if rowk[active[a]] != 0:
                    return False
                Ai = <list>A[active[a]]
                for b in range(m):
                    if Ai[active[b]] != 0:
                        return False
            return True
        for a in range(m):
            i = active[a]
            Ai = <list>A[i]
            aik = rowk[i]
            if aik:
                for b in range(m):
                    j = active[b]
                    Ai[j] = (p * Ai[j] - aik * rowk[j]) // prev
            else:
                for b in range(m):
                    j = active[b]
                    Ai[j] = (p * Ai[j]) // prev
        prev = p
    return True
