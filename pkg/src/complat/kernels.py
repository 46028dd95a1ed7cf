"""Hot loops, twice: numba @njit kernels and pure-numpy fallbacks.

Three kernel families live here:

  * identity scan      - run two compiled term programs over every variable
                         assignment of an algebra, return the first mismatch
  * closure round      - one frontier round of the free-algebra closure with
                         exact hash-table deduplication
  * lattice mask scan  - brute-force scan of upper-triangular order relations
                         for bounded lattices (enumeration oracle)

Both backends follow the same canonical candidate/assignment order, so their
results are bit-identical; backend.BACKEND picks which one runs.  The pure
functions are kept importable individually so benchmarks can time both in
one process.
"""

from __future__ import annotations

import numpy as np

from .backend import USE_NUMBA

OP_VAR = 0
OP_BOT = 1
OP_TOP = 2
OP_JOIN = 3
OP_MEET = 4
OP_COMP = 5

_FNV_OFFSET = np.uint64(0xCBF29CE484222325)
_FNV_PRIME = np.uint64(0x100000001B3)


# --------------------------------------------------------------------------
# identity scan
# --------------------------------------------------------------------------

def _run_program_vec(prog: np.ndarray, envs: np.ndarray, join: np.ndarray,
                     meet: np.ndarray, comp: np.ndarray, size: int,
                     total: int) -> np.ndarray:
    stack: list[np.ndarray] = []
    for p in range(prog.shape[0]):
        op, arg = prog[p]
        if op == OP_VAR:
            stack.append(envs[arg])
        elif op == OP_BOT:
            stack.append(np.zeros(total, dtype=np.int64))
        elif op == OP_TOP:
            stack.append(np.full(total, size - 1, dtype=np.int64))
        elif op == OP_COMP:
            stack[-1] = comp[stack[-1]]
        else:
            b = stack.pop()
            a = stack.pop()
            table = join if op == OP_JOIN else meet
            stack.append(table[a, b])
    return stack[0]


def scan_identity_numpy(prog_l, prog_r, join, meet, comp, size, nvars, maxdepth):
    """Vectorized evaluation of both sides over all assignments."""
    total = size ** nvars
    if nvars:
        envs = np.indices((size,) * nvars).reshape(nvars, -1)
    else:
        envs = np.zeros((0, 1), dtype=np.int64)
    lv = _run_program_vec(prog_l, envs, join, meet, comp, size, total)
    rv = _run_program_vec(prog_r, envs, join, meet, comp, size, total)
    bad = np.flatnonzero(lv != rv)
    if bad.size == 0:
        return -1, -1, -1
    i = int(bad[0])
    return i, int(lv[i]), int(rv[i])


if USE_NUMBA:
    from numba import njit

    @njit(cache=True, nogil=True)
    def _run_program_nb(prog, env, stack, join, meet, comp, size):
        sp = 0
        for p in range(prog.shape[0]):
            op = prog[p, 0]
            if op == OP_VAR:
                stack[sp] = env[prog[p, 1]]
                sp += 1
            elif op == OP_BOT:
                stack[sp] = 0
                sp += 1
            elif op == OP_TOP:
                stack[sp] = size - 1
                sp += 1
            elif op == OP_COMP:
                stack[sp - 1] = comp[stack[sp - 1]]
            elif op == OP_JOIN:
                sp -= 1
                stack[sp - 1] = join[stack[sp - 1], stack[sp]]
            else:
                sp -= 1
                stack[sp - 1] = meet[stack[sp - 1], stack[sp]]
        return stack[0]

    @njit(cache=True, nogil=True)
    def scan_identity_numba(prog_l, prog_r, join, meet, comp, size, nvars,
                            maxdepth):
        total = 1
        for _ in range(nvars):
            total *= size
        env = np.zeros(max(nvars, 1), dtype=np.int64)
        stack = np.empty(maxdepth + 1, dtype=np.int64)
        for idx in range(total):
            rem = idx
            for v in range(nvars - 1, -1, -1):
                env[v] = rem % size
                rem //= size
            lv = _run_program_nb(prog_l, env, stack, join, meet, comp, size)
            rv = _run_program_nb(prog_r, env, stack, join, meet, comp, size)
            if lv != rv:
                return idx, lv, rv
        return -1, -1, -1


def scan_identity(prog_l, prog_r, join, meet, comp, size, nvars, maxdepth):
    if USE_NUMBA:
        return scan_identity_numba(prog_l, prog_r, join, meet, comp,
                                   size, nvars, maxdepth)
    return scan_identity_numpy(prog_l, prog_r, join, meet, comp,
                               size, nvars, maxdepth)


# --------------------------------------------------------------------------
# free-algebra closure
# --------------------------------------------------------------------------
#
# Candidate order inside a round over frontier [fs, fe) and known [0, fe):
#   1. comp(e)              for e in fs..fe-1
#   2. join(e, k), meet(e, k)  for e in fs..fe-1, k in 0..fe-1, join first
# Elements are inserted the moment their candidate row is first seen, so the
# discovery order (and therefore the whole store) is canonical.  The round
# bounds fs, fe are caller state so that an interrupted round replays with
# the exact same candidate sequence.

def new_hash_table(capacity: int) -> np.ndarray:
    size = 16
    while size < 2 * capacity:
        size *= 2
    return np.full(size, -1, dtype=np.int64)


def _row_key(row: np.ndarray) -> bytes:
    return row.tobytes()


def rebuild_index_numpy(store: np.ndarray, count: int) -> dict:
    index = {}
    for i in range(count):
        index[_row_key(store[i])] = i
    return index


def insert_rows_numpy(store, count, index, rows, cap):
    """Insert candidate rows in order; returns (count, hit_cap)."""
    m = store.shape[1]
    buf = rows.tobytes()
    for r in range(rows.shape[0]):
        key = buf[r * m:(r + 1) * m]
        if key not in index:
            if count == cap:
                return count, True
            index[key] = count
            store[count] = rows[r]
            count += 1
    return count, False


def closure_round_numpy(store, count, fs, fe, join_u8, meet_u8, comp_u8, index,
                        cap, chunk=8192):
    """One closure round over frontier [fs, fe); mirrors closure_round_numba.

    fe is explicit state, not derived from count: replaying a cap-interrupted
    round must pair against the original known set even though the store
    already holds elements discovered later in that round.
    """
    comps = comp_u8[store[fs:fe]]
    count, full = insert_rows_numpy(store, count, index, comps, cap)
    if full:
        return count, True
    m = store.shape[1]
    for i in range(fs, fe):
        row_i = store[i]
        for k0 in range(0, fe, chunk):
            k1 = min(k0 + chunk, fe)
            block = store[k0:k1]
            joins = join_u8[row_i[None, :], block]
            meets = meet_u8[row_i[None, :], block]
            cand = np.empty((2 * (k1 - k0), m), dtype=np.uint8)
            cand[0::2] = joins
            cand[1::2] = meets
            count, full = insert_rows_numpy(store, count, index, cand, cap)
            if full:
                return count, True
    return count, False


if USE_NUMBA:

    @njit(cache=True, nogil=True)
    def _insert_nb(store, count, table, tmask, row, cap):
        """Returns new count, or -2 when the row is new but the cap is hit."""
        h = _FNV_OFFSET
        for c in range(row.shape[0]):
            h = (h ^ np.uint64(row[c])) * _FNV_PRIME
        h = h & tmask
        while True:
            e = table[h]
            if e == -1:
                if count == cap:
                    return -2
                store[count] = row
                table[h] = count
                return count + 1
            same = True
            er = store[e]
            for c in range(row.shape[0]):
                if er[c] != row[c]:
                    same = False
                    break
            if same:
                return count
            h = (h + np.uint64(1)) & tmask

    @njit(cache=True, nogil=True)
    def insert_rows_numba(store, count, table, rows, cap):
        tmask = np.uint64(table.shape[0] - 1)
        for r in range(rows.shape[0]):
            res = _insert_nb(store, count, table, tmask, rows[r], cap)
            if res == -2:
                return count, True
            count = res
        return count, False

    @njit(cache=True, nogil=True)
    def rebuild_index_numba(store, count, table):
        tmask = np.uint64(table.shape[0] - 1)
        for i in range(count):
            row = store[i]
            h = _FNV_OFFSET
            for c in range(row.shape[0]):
                h = (h ^ np.uint64(row[c])) * _FNV_PRIME
            h = h & tmask
            while table[h] != -1:
                h = (h + np.uint64(1)) & tmask
            table[h] = i

    @njit(cache=True, nogil=True)
    def closure_round_numba(store, count, fs, fe, join_u8, meet_u8, comp_u8,
                            table, cap):
        m = store.shape[1]
        tmask = np.uint64(table.shape[0] - 1)
        tmp = np.empty(m, dtype=np.uint8)
        for i in range(fs, fe):
            row = store[i]
            for c in range(m):
                tmp[c] = comp_u8[row[c]]
            res = _insert_nb(store, count, table, tmask, tmp, cap)
            if res == -2:
                return count, True
            count = res
        for i in range(fs, fe):
            row_i = store[i]
            for k in range(fe):
                row_k = store[k]
                for c in range(m):
                    tmp[c] = join_u8[row_i[c], row_k[c]]
                res = _insert_nb(store, count, table, tmask, tmp, cap)
                if res == -2:
                    return count, True
                count = res
                for c in range(m):
                    tmp[c] = meet_u8[row_i[c], row_k[c]]
                res = _insert_nb(store, count, table, tmask, tmp, cap)
                if res == -2:
                    return count, True
                count = res
        return count, False


# --------------------------------------------------------------------------
# bounded-lattice mask scan (enumeration oracle)
# --------------------------------------------------------------------------
#
# Relations live on the strict upper triangle in pair order
# (0,1), (0,2), ..., (0,n-1), (1,2), ...; bit t of a mask decides pair t.
# Only relations compatible with the index order are scanned; every finite
# lattice admits such a labeling, and duplicates are collapsed later by
# canonical form.

def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def lattice_masks_numpy(n: int, batch: int = 1 << 16) -> np.ndarray:
    pairs = _pair_list(n)
    npairs = len(pairs)
    total = 1 << npairs
    eye = np.eye(n, dtype=bool)
    out = []
    for start in range(0, total, batch):
        stop = min(start + batch, total)
        mk = np.arange(start, stop, dtype=np.int64)
        B = mk.size
        leq = np.zeros((B, n, n), dtype=bool)
        leq[:, np.arange(n), np.arange(n)] = True
        for t, (i, j) in enumerate(pairs):
            leq[:, i, j] = (mk >> t) & 1
        u8 = leq.astype(np.uint8)
        closure = np.matmul(u8, u8) > 0
        keep = ~((closure & ~leq).any(axis=(1, 2)))
        strict = leq & ~eye
        for j in range(1, n):
            keep &= strict[:, :, j].any(axis=1)
        for i in range(n - 1):
            keep &= strict[:, i, :].any(axis=1)
        sub = leq[keep]
        mk2 = mk[keep]
        if mk2.size == 0:
            continue
        ok = np.ones(mk2.size, dtype=bool)
        ar = np.arange(mk2.size)
        for a, b in pairs:
            ub = sub[:, a, :] & sub[:, b, :]
            least = ub.argmax(axis=1)
            ok &= ub.any(axis=1)
            ok &= ~((ub & ~sub[ar, least, :]).any(axis=1))
            lb = sub[:, :, a] & sub[:, :, b]
            greatest = n - 1 - lb[:, ::-1].argmax(axis=1)
            ok &= lb.any(axis=1)
            ok &= ~((lb & ~sub[ar, :, greatest]).any(axis=1))
        out.append(mk2[ok])
    if not out:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(out)


if USE_NUMBA:

    @njit(cache=True, nogil=True)
    def lattice_masks_numba(n):
        npairs = n * (n - 1) // 2
        total = 1 << npairs
        pi = np.empty(npairs, dtype=np.int64)
        pj = np.empty(npairs, dtype=np.int64)
        t = 0
        for i in range(n):
            for j in range(i + 1, n):
                pi[t] = i
                pj[t] = j
                t += 1
        found = np.empty(total, dtype=np.int64)
        cnt = 0
        leq = np.zeros((n, n), dtype=np.bool_)
        for mask in range(total):
            for i in range(n):
                for j in range(n):
                    leq[i, j] = i == j
            for t in range(npairs):
                if (mask >> t) & 1:
                    leq[pi[t], pj[t]] = True
            ok = True
            for i in range(n):
                if not ok:
                    break
                for j in range(i + 1, n):
                    if leq[i, j]:
                        for k in range(j + 1, n):
                            if leq[j, k] and not leq[i, k]:
                                ok = False
                                break
                        if not ok:
                            break
            if not ok:
                continue
            for j in range(1, n):
                has = False
                for i in range(j):
                    if leq[i, j]:
                        has = True
                        break
                if not has:
                    ok = False
                    break
            if not ok:
                continue
            for i in range(n - 1):
                has = False
                for j in range(i + 1, n):
                    if leq[i, j]:
                        has = True
                        break
                if not has:
                    ok = False
                    break
            if not ok:
                continue
            # unique least upper bound: in an index-ordered labeling the
            # least common upper bound, if any, is the lowest-index one
            for a in range(n):
                if not ok:
                    break
                for b in range(a + 1, n):
                    least = -1
                    for c in range(n):
                        if leq[a, c] and leq[b, c]:
                            if least == -1:
                                least = c
                            elif not leq[least, c]:
                                ok = False
                                break
                    if ok and least == -1:
                        ok = False
                    if not ok:
                        break
                    greatest = -1
                    for c in range(n - 1, -1, -1):
                        if leq[c, a] and leq[c, b]:
                            if greatest == -1:
                                greatest = c
                            elif not leq[c, greatest]:
                                ok = False
                                break
                    if ok and greatest == -1:
                        ok = False
                    if not ok:
                        break
            if ok:
                found[cnt] = mask
                cnt += 1
        return found[:cnt]


def lattice_masks(n: int) -> np.ndarray:
    if USE_NUMBA:
        return lattice_masks_numba(n)
    return lattice_masks_numpy(n)


def leq_from_mask(n: int, mask: int) -> np.ndarray:
    """Decode a surviving scan mask back into an order matrix."""
    leq = np.eye(n, dtype=bool)
    for t, (i, j) in enumerate(_pair_list(n)):
        if (mask >> t) & 1:
            leq[i, j] = True
    return leq
