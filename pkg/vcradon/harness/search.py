r"""
Simulated annealing over extremal classes, looking for classes with large dual VC dimension or Radon number
relative to their VC dimension.

The objective is :math:`vc^\star - 2 vc` or :math:`r - 2 vc`. Both are at most 1 on extremal classes,
so the search can reach 1 but never exceed it unless something is wrong; a larger value is reported as a
refutation. The search never concludes that no better class exists.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

import numpy as np

from vcradon.classes import ConceptClass, is_extremal, sauer_shelah_bound, vc, vc_star
from vcradon.convex import radon_number
from vcradon.gen import gen_ball

logger = logging.getLogger(__name__)

GOALS = ("vcstar", "radon")


@dataclass
class SearchState:
    r"""
    Attributes:
        seed: seed of the run
        goal: 'vcstar' or 'radon'
        current: the class the walk stands on
        current_objective: its objective
        best: the best class seen so far
        best_objective: its objective
        iteration: number of moves proposed so far
        refuted: whether some class exceeded the proven bound
    """

    seed: int
    goal: str
    current: ConceptClass
    current_objective: int
    best: ConceptClass
    best_objective: int
    iteration: int = 0
    refuted: bool = False

    def to_record(self) -> dict:
        return {
            "seed": self.seed,
            "goal": self.goal,
            "iteration": self.iteration,
            "current_objective": self.current_objective,
            "best_objective": self.best_objective,
            "best": self.best.to_strings(),
            "refuted": self.refuted,
        }


class Annealer:
    r"""
    Simulated annealing on extremal classes of VC dimension between 1 and d.

    Moves add a concept, remove one, or flip one bit of one; moves leaving the constraint set are rejected.
    Accepted moves follow the Metropolis rule for maximization with a geometric cooling schedule

    .. math::

        T_k = T_0 (T_{end} / T_0)^{k / \mathrm{max\_iter}}

    The walk starts from the Hamming ball of radius d around a seeded center, a maximum class of VC dimension d.

    Attributes:
        goal: 'vcstar' or 'radon'
        d: largest VC dimension allowed
        n: domain size (default 4 d + 4)
        max_size: largest class size allowed (default the larger of 4 n and twice the starting ball)
        max_iter: number of proposed moves
        t0: initial temperature
        t_end: final temperature
        seed: seed of the numpy generator
        eval_func: user-defined function of the state, evaluated after every move
    """

    def __init__(
        self,
        goal: str = "radon",
        d: int = 1,
        n: int | None = None,
        max_size: int | None = None,
        max_iter: int = 1000,
        t0: float = 1.0,
        t_end: float = 0.01,
        seed: int = 0,
        eval_func: Callable | None = None,
    ):
        if goal not in GOALS:
            raise ValueError(f"Unknown goal '{goal}', expected one of {GOALS}.")
        if d < 1:
            raise ValueError(f"d should be at least 1, got {d}.")
        self.goal = goal
        self.d = d
        self.n = n if n is not None else 4 * d + 4
        if self.n <= d:
            raise ValueError(f"The domain size {self.n} should exceed d = {d}.")
        self.max_size = max_size if max_size is not None else max(4 * self.n, 2 * sauer_shelah_bound(self.n, d))
        self.max_iter = max_iter
        self.t0 = t0
        self.t_end = t_end
        self.seed = seed
        self.eval_func = eval_func
        self._cache: Dict[ConceptClass, int | None] = {}

    def objective(self, C: ConceptClass) -> int | None:
        r"""
        The objective of C, or None if C leaves the constraint set.
        """
        if C in self._cache:
            return self._cache[C]
        value = None
        if 0 < len(C) <= self.max_size and is_extremal(C):
            v = vc(C)
            if 1 <= v <= self.d:
                if self.goal == "vcstar":
                    value = vc_star(C) - 2 * v
                else:
                    value = radon_number(C, limit=2 * v + 2).value - 2 * v
        self._cache[C] = value
        return value

    def initial(self) -> ConceptClass:
        rng = np.random.default_rng(self.seed)
        center = int(rng.integers(0, 1 << self.n))
        return gen_ball(self.n, self.d, center)

    def propose(self, C: ConceptClass, rng: np.random.Generator) -> ConceptClass:
        move = int(rng.integers(0, 3))
        concepts = C.concepts
        if move == 0:
            c = int(rng.integers(0, 1 << self.n))
            return C | ConceptClass(self.n, [c])
        i = int(rng.integers(0, len(concepts)))
        if move == 1:
            return ConceptClass(self.n, concepts[:i] + concepts[i + 1:])
        x = int(rng.integers(0, self.n))
        flipped = concepts[i] ^ (1 << (self.n - 1 - x))
        return ConceptClass(self.n, concepts[:i] + concepts[i + 1:] + (flipped,))

    def _check(self, state: SearchState, C: ConceptClass, value: int):
        if value > 1 and not state.refuted:
            state.refuted = True
            logger.error(
                "goal %s reached %d > 1 at iteration %d on %s",
                self.goal, value, state.iteration, " ".join(C.to_strings()),
            )

    def run(self, x0: ConceptClass | None = None):
        r"""
        Run the annealing.

        Args:
            x0: initial class, the seeded ball if None; it must satisfy the constraints

        Returns:
            state: the final SearchState
            saved: (optional) a list of eval_func values, one per iteration
        """
        rng = np.random.default_rng([self.seed, 1])
        C = x0 if x0 is not None else self.initial()
        value = self.objective(C)
        if value is None:
            raise ValueError(f"The initial class {C!r} is not extremal with 1 <= vc <= {self.d}.")
        state = SearchState(self.seed, self.goal, C, value, C, value)
        self._check(state, C, value)
        if self.eval_func is not None:
            saved = []
        ratio = self.t_end / self.t0
        for k in range(1, self.max_iter + 1):
            state.iteration = k
            T = self.t0 * ratio ** (k / self.max_iter)
            D = self.propose(state.current, rng)
            new = self.objective(D)
            if new is not None:
                delta = new - state.current_objective
                if delta >= 0 or rng.random() < math.exp(delta / max(T, 1e-12)):
                    state.current, state.current_objective = D, new
                    self._check(state, D, new)
                    if new > state.best_objective:
                        state.best, state.best_objective = D, new
                        logger.info("iteration %d: objective %d with %d concepts", k, new, len(D))
            if self.eval_func is not None:
                saved.append(self.eval_func(state))
        logger.debug("search seed %d finished with best objective %d", self.seed, state.best_objective)
        if self.eval_func is not None:
            return state, saved
        return state


def stochastic_search(
    goal: str,
    d: int = 1,
    seed: int = 0,
    budget: int = 1000,
    n: int | None = None,
    max_size: int | None = None,
) -> SearchState:
    r"""
    Run one :class:`Annealer` with max_iter = budget and return its final state.
    A budget of 0 returns the seeded initial class.
    """
    return Annealer(goal=goal, d=d, n=n, max_size=max_size, max_iter=budget, seed=seed).run()


def _search_job(args) -> SearchState:
    return stochastic_search(*args)


def search_many(
    goal: str,
    d: int,
    seeds: Sequence[int],
    budget: int,
    n: int | None = None,
    max_size: int | None = None,
    workers: int = 1,
) -> List[SearchState]:
    r"""
    Independent searches for several seeds, run in parallel. Results are returned in seed order.
    """
    jobs = [(goal, d, s, budget, n, max_size) for s in seeds]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_search_job, jobs))
    return [_search_job(j) for j in jobs]
