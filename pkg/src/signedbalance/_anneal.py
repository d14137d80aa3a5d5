"""Compiled inner loop for simulated annealing on signed graphs.

Kept separate so the rest of the package stays importable and debuggable
without touching numba. The kernel works on the compressed adjacency
arrays produced by ``SignedGraph.csr_arrays``.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def anneal_kernel(n, indptr, neighbors, esigns, t0, cooling, iters_per_level, t_min, patience, seed):
    """One annealing run; returns (best_energy, best_state, levels).

    Energy is the number of frustrated edges under the current +-1 state.
    Flipping node i changes the energy by state[i] * sum of sign * state
    over its incident edges, so each proposal is O(degree). Cooling is
    geometric; the run stops when the temperature floor is reached, when
    ``patience`` consecutive levels fail to improve the best energy, or
    when the best energy hits zero (nothing can beat a balanced split).
    """
    np.random.seed(seed)
    state = np.empty(n, dtype=np.int8)
    for i in range(n):
        state[i] = 1 if np.random.random() < 0.5 else -1

    energy = 0
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = neighbors[k]
            if v > u and esigns[k] * state[u] * state[v] < 0:
                energy += 1

    best_energy = energy
    best_state = state.copy()
    t = t0
    quiet = 0
    levels = 0
    while t >= t_min and quiet < patience and best_energy > 0:
        improved = False
        for _ in range(iters_per_level):
            i = np.random.randint(0, n)
            delta = 0
            for k in range(indptr[i], indptr[i + 1]):
                delta += esigns[k] * state[neighbors[k]]
            delta *= state[i]
            if delta <= 0 or np.random.random() < np.exp(-delta / t):
                state[i] = -state[i]
                energy += delta
                if energy < best_energy:
                    best_energy = energy
                    best_state[:] = state
                    improved = True
                    if best_energy == 0:
                        break
        levels += 1
        if improved:
            quiet = 0
        else:
            quiet += 1
        t *= cooling
    return best_energy, best_state, levels
