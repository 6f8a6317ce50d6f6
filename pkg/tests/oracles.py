"""Slow, definition-level reference implementations used to cross-check the library."""

from itertools import product


def naive_reduce(w, inv):
    w = list(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if inv[w[i]] == w[i + 1]:
                del w[i:i + 2]
                changed = True
                break
    return tuple(w)


def naive_fixed_point_factors(images, seed, L, length=20000):
    w = [seed]
    while len(w) < length:
        nxt = []
        for a in w:
            nxt.extend(images[a])
        if len(nxt) == len(w):
            break
        w = nxt
    w = tuple(w[:length])
    out = {()}
    for n in range(1, L + 1):
        for i in range(len(w) - n + 1):
            out.add(w[i:i + n])
    return out


def naive_complete_returns(S, X):
    X = {tuple(x) for x in X}
    out = set()
    for w in S.nonempty():
        n = len(w)
        pre = any(w[:k] in X for k in range(1, n))
        suf = any(w[k:] in X for k in range(1, n))
        internal = any(w[i:j] in X for i in range(1, n) for j in range(i + 1, n))
        if pre and suf and not internal:
            out.add(w)
    return out


def naive_parse_count(w, X):
    X = {tuple(x) for x in X}
    P = {x[:i] for x in X for i in range(len(x))}
    Q = {x[i:] for x in X for i in range(1, len(x) + 1)} | {()}

    def in_star(u):
        if not u:
            return True
        return any(u[:k] in X and in_star(u[k:]) for k in range(1, len(u) + 1))

    n = len(w)
    return sum(
        1
        for i in range(n + 1)
        for j in range(i, n + 1)
        if w[:i] in Q and w[j:] in P and in_star(w[i:j])
    )


def naive_extension_counts(S, w):
    k = S.alphabet.size
    left = {a for a in range(k) if (a,) + w in S.words}
    right = {b for b in range(k) if w + (b,) in S.words}
    edges = {(a, b) for a, b in product(range(k), repeat=2) if (a,) + w + (b,) in S.words}
    return len(left), len(right), len(edges)


def orbit_closure(start, gens, inv):
    """Words reachable as reduced products; used to test membership on small cases."""
    seen = {start}
    frontier = [start]
    for _ in range(3):
        nxt = []
        for u in frontier:
            for g in gens:
                v = naive_reduce(u + g, inv)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def words(S_or_alphabet, *texts):
    """Parse space-separated words into a set of tuples."""
    A = getattr(S_or_alphabet, "alphabet", S_or_alphabet)
    return {A.parse(t) for text in texts for t in text.split()}
