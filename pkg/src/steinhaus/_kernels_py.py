"""Pure-Python hot kernels.

Reference implementation of every function in ``_kernels.pyx``; selected
automatically when the compiled extension is missing.  Rows are packed ints:
bit ``j - i`` of row ``i`` holds the triangle entry ``a[i][j]``.
"""

FULL, HSYM, RSYM, DSYM, DSYM0 = 0, 1, 2, 3, 4


def derive_rows(bits, n):
    rows = []
    r = bits
    for i in range(n):
        rows.append(r & ((1 << (n - i)) - 1))
        r ^= r >> 1
    return rows


def _row_is_palindrome(r, length):
    for p in range(length // 2):
        if ((r >> p) ^ (r >> (length - 1 - p))) & 1:
            return False
    return True


def _is_hsym(rows, n):
    for i in range(n):
        if not _row_is_palindrome(rows[i], n - i):
            return False
    return True


def _is_rsym(rows, n):
    # entry-wise r(t) == t with r: a[i][j] -> a[j-i+1][n-i+1]
    for i in range(1, n + 1):
        row = rows[i - 1]
        for j in range(i, n + 1):
            src_i, src_j = j - i + 1, n - i + 1
            if ((row >> (j - i)) ^ (rows[src_i - 1] >> (src_j - src_i))) & 1:
                return False
    return True


def member(bits, n, cls):
    if cls == FULL:
        return True
    rows = derive_rows(bits, n)
    if cls == HSYM:
        return _is_hsym(rows, n)
    if cls == RSYM:
        return _is_rsym(rows, n)
    ok = _is_hsym(rows, n) and _is_rsym(rows, n)
    if cls == DSYM0:
        ok = ok and bin(bits).count("1") % 2 == 0
    return ok


def scan_members(n, cls):
    """All first rows of length ``n`` whose triangle lies in class ``cls``."""
    return [s for s in range(1 << n) if member(s, n, cls)]


def degree_parities(bits, order):
    """Packed degree parities (bit v-1 for vertex v) of the graph G(bits)."""
    m = order - 1
    rows = derive_rows(bits, m)
    # vertex i meets i+1..n through row i and 1..i-1 through column i-1;
    # XOR of the rows shifted into column position gives every column parity
    par = cols = 0
    for i, row in enumerate(rows):
        par |= (bin(row).count("1") & 1) << i
        cols ^= row << i
    return par ^ (cols << 1)


def scan_graph_parity(order):
    """Split all sequences of length ``order - 1`` into even and odd graphs."""
    even, odd = [], []
    full = (1 << order) - 1
    for s in range(1 << (order - 1)):
        p = degree_parities(s, order)
        if p == 0:
            even.append(s)
        elif p == full:
            odd.append(s)
    return even, odd


def gf2_rank(vectors):
    pivots = {}
    rank = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                rank += 1
                break
            v ^= p
    return rank
