# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``nsg._pykernels``."""
from libc.stdlib cimport malloc, calloc, free

BACKEND = "cython"


cdef int _gens(unsigned char* arr, int c, bint lo_only, int* out) noexcept nogil:
    cdef int m, x, a, n = 0, start
    cdef bint ok
    if c == 0:
        out[0] = 1
        return 1
    m = 1
    while not arr[m]:
        m += 1
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
            out[n] = x
            n += 1
    return n


cdef void _invariants(unsigned char* arr, int c, unsigned char* omega,
                      unsigned char* K, int* ntype_out, int* col_out) noexcept nogil:
    cdef int F, a, h, x, z, y, ntype = 0, missing = 0
    cdef bint ok, hit
    if c == 0:
        ntype_out[0] = 1
        col_out[0] = 0
        return
    F = c - 1
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
    for x in range(c):
        omega[x] = 0 if arr[F - x] else 1
    for z in range(c):
        K[z] = 0
        if not arr[z]:
            continue
        ok = True
        for x in range(c - z):
            if omega[x] and not arr[z + x]:
                ok = False
                break
        if ok:
            K[z] = 1
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
    ntype_out[0] = ntype
    col_out[0] = missing


def window_invariants(window, int c):
    cdef int F, a, h, x, z
    cdef bint ok
    if c == 0:
        return (-1,), b""
    cdef unsigned char* arr = <unsigned char*> malloc(2 * c + 1)
    cdef unsigned char* omega = <unsigned char*> malloc(c)
    cdef unsigned char* trace = <unsigned char*> calloc(c, 1)
    pf = []
    try:
        for x in range(c):
            arr[x] = 1 if window[x] else 0
        for x in range(c, 2 * c + 1):
            arr[x] = 1
        F = c - 1
        for a in range(c):
            if arr[a]:
                continue
            ok = True
            for h in range(1, c - a):
                if arr[h] and not arr[a + h]:
                    ok = False
                    break
            if ok:
                pf.append(a)
        for x in range(c):
            omega[x] = 0 if arr[F - x] else 1
        for z in range(c):
            if not arr[z]:
                continue
            ok = True
            for x in range(c - z):
                if omega[x] and not arr[z + x]:
                    ok = False
                    break
            if ok:
                for x in range(c - z):
                    if omega[x]:
                        trace[z + x] = 1
        return tuple(pf), bytes(<unsigned char[:c]> trace)
    finally:
        free(arr)
        free(omega)
        free(trace)


cdef class _Scan:
    cdef unsigned char* arr
    cdef unsigned char* omega
    cdef unsigned char* K
    cdef int* gens
    cdef int size, genus_max
    cdef list out

    def __cinit__(self, int size, int genus_max):
        self.size = size
        self.genus_max = genus_max
        self.arr = <unsigned char*> malloc(size)
        self.omega = <unsigned char*> malloc(size)
        self.K = <unsigned char*> malloc(size)
        self.gens = <int*> malloc(sizeof(int) * (size + 1) * (genus_max + 2))
        self.out = []

    def __dealloc__(self):
        free(self.arr)
        free(self.omega)
        free(self.K)
        free(self.gens)

    cdef void visit(self, int c, int g, int depth):
        cdef int* gens = self.gens + depth * (self.size + 1)
        cdef int ng, i, x, ntype, col
        ng = _gens(self.arr, c, False, gens)
        _invariants(self.arr, c, self.omega, self.K, &ntype, &col)
        self.out.append((bytes(self.arr[:c]), c, g,
                         tuple([gens[i] for i in range(ng)]), ntype, col))
        if g >= self.genus_max:
            return
        for i in range(ng):
            x = gens[i]
            if x < c:
                continue
            self.arr[x] = 0
            self.visit(x + 1, g + 1, depth + 1)
            self.arr[x] = 1


def scan_subtree(window, int c, int genus, int genus_max):
    cdef int size = 4 * genus_max + 4 + c
    cdef int x
    cdef _Scan s = _Scan(size, genus_max - genus + 1)
    for x in range(size):
        s.arr[x] = 1
    for x in range(c):
        s.arr[x] = 1 if window[x] else 0
    s.genus_max = genus_max
    s.visit(c, genus, 0)
    return s.out


cdef class _Search:
    cdef unsigned char* arr
    cdef unsigned char* inH
    cdef int* gaps_from
    cdef int* gens
    cdef int size, hgenus, best, bound
    cdef long long nodes, node_limit
    cdef bint complete
    cdef list witnesses

    def __cinit__(self, int size, int depth):
        self.size = size
        self.arr = <unsigned char*> malloc(size + 1)
        self.inH = <unsigned char*> malloc(size + 1)
        self.gaps_from = <int*> malloc(sizeof(int) * (size + 2))
        self.gens = <int*> malloc(sizeof(int) * (size + 1) * (depth + 2))
        self.witnesses = []

    def __dealloc__(self):
        free(self.arr)
        free(self.inH)
        free(self.gaps_from)
        free(self.gens)

    cdef void visit(self, int c, int g, int depth):
        cdef int* gens = self.gens + depth * (self.size + 1)
        cdef int remaining, d, ng, i, x, y
        cdef bint ok
        if self.nodes >= self.node_limit:
            self.complete = False
            return
        self.nodes += 1
        remaining = self.gaps_from[c] if c <= self.size else 0
        if g + remaining > self.hgenus + self.bound:
            return
        if remaining == 0 and 2 * g == c:
            d = g - self.hgenus
            if self.best < 0 or d < self.best:
                self.best = d
                self.bound = d
                self.witnesses = [(bytes(self.arr[:c]), c)]
            elif d == self.best:
                self.witnesses.append((bytes(self.arr[:c]), c))
        ng = _gens(self.arr, c, True, gens)
        for i in range(ng):
            x = gens[i]
            ok = True
            for y in range(c, x):
                if not self.inH[y]:
                    ok = False
                    break
            if not ok:
                break
            self.arr[x] = 0
            self.visit(x + 1, g + 1, depth + 1)
            self.arr[x] = 1
            if not self.complete:
                return


def search_symmetric(hwindow, int hc, int hgenus, int d_max, long long node_limit):
    cdef int gmax = hgenus + d_max
    cdef int size = 4 * gmax + 4 + hc
    cdef int x
    cdef _Search s = _Search(size, gmax + 1)
    for x in range(size + 1):
        s.inH[x] = 1
        s.arr[x] = 1
    for x in range(hc):
        s.inH[x] = 1 if hwindow[x] else 0
    s.gaps_from[size + 1] = 0
    for x in range(size, -1, -1):
        s.gaps_from[x] = s.gaps_from[x + 1] + (0 if s.inH[x] else 1)
    s.hgenus = hgenus
    s.best = -1
    s.bound = d_max
    s.nodes = 0
    s.node_limit = node_limit
    s.complete = True
    s.visit(0, 0, 0)
    return s.best, s.witnesses, s.nodes, s.complete
