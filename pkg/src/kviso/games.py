"""Two bounded search problems solved by exhaustive branching.

The hitting game: two players alternately pick previously unpicked
elements; the game ends the moment every set of the collection contains a
picked element, and whoever made that pick wins. We decide whether the
first player can force a win within a total move budget.

Weighted CNF satisfiability: find a satisfying assignment with at most k
true variables, branching only on the positive literals of a falsified
clause, which bounds the tree by the clause width.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphFormatError


@dataclass(frozen=True)
class HittingGameInstance:
    """Universe, set collection and the two parameters of the hitting game.

    max_set_size bounds every set (the branching width), move_budget is the
    total number of moves both players together may make.
    """

    universe: tuple
    sets: tuple[frozenset, ...]
    max_set_size: int
    move_budget: int

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe has repeated elements")
        ground = set(self.universe)
        for s in self.sets:
            if not s:
                raise ValueError("sets must be non-empty")
            if not s <= ground:
                raise ValueError(f"set {sorted(s, key=repr)} leaves the universe")
            if len(s) > self.max_set_size:
                raise ValueError("a set exceeds max_set_size")
        if self.move_budget < 1:
            raise ValueError("move budget must be at least 1")


def _hitting_value(inst: HittingGameInstance, chosen: frozenset, moves_left: int,
                   first_to_move: bool, memo: dict) -> bool:
    """True iff the first player forces a win within the remaining budget."""
    if moves_left == 0:
        return False
    state = (chosen, moves_left, first_to_move)
    if state in memo:
        return memo[state]

    unhit = [s for s in inst.sets if not s & chosen]
    alive = frozenset().union(*unhit)
    # elements outside every unhit set only burn a move; they are mutually
    # interchangeable, so trying a single representative is enough
    candidates = [e for e in inst.universe if e in alive]
    for e in inst.universe:
        if e not in chosen and e not in alive:
            candidates.append(e)
            break

    value = not first_to_move
    for e in candidates:
        grown = chosen | {e}
        if all(s & grown for s in inst.sets):
            outcome = first_to_move  # the mover completed the hitting
        else:
            outcome = _hitting_value(inst, grown, moves_left - 1,
                                     not first_to_move, memo)
        if first_to_move and outcome:
            value = True
            break
        if not first_to_move and not outcome:
            value = False
            break
    memo[state] = value
    return value


def player_one_wins(inst: HittingGameInstance) -> bool:
    """Exact minimax value of the hitting game for the first player."""
    if not inst.sets:
        raise ValueError("the set collection is empty; the game is ill-posed")
    return _hitting_value(inst, frozenset(), inst.move_budget, True, {})


def winning_first_move(inst: HittingGameInstance):
    """A first move that forces a win, or None if there is none."""
    if not inst.sets:
        raise ValueError("the set collection is empty; the game is ill-posed")
    memo: dict = {}
    for e in inst.universe:
        grown = frozenset({e})
        if all(s & grown for s in inst.sets):
            return e
        if _hitting_value(inst, grown, inst.move_budget - 1, False, memo):
            return e
    return None


def parse_hitting_sets(text: str) -> tuple[tuple, tuple[frozenset, ...]]:
    """Read one set per line, elements whitespace-separated.

    The universe is every element seen, in order of first appearance.
    """
    universe: list = []
    seen = set()
    sets = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        elems = line.split()
        for e in elems:
            if e not in seen:
                seen.add(e)
                universe.append(e)
        sets.append(frozenset(elems))
    return tuple(universe), tuple(sets)


# ---------------------------------------------------------------------------
# weight-bounded CNF satisfiability


@dataclass(frozen=True)
class CnfInstance:
    """CNF over variables 1..num_vars with a bound k on the true-variable count.

    Clauses are tuples of nonzero signed literals. The clause width q is the
    branching factor of the search.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(
            self, "clauses", tuple(tuple(c) for c in self.clauses)
        )
        if self.num_vars < 0:
            raise ValueError("variable count must be non-negative")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        for c in self.clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @property
    def q(self) -> int:
        return max((len(c) for c in self.clauses), default=0)


class SatStats:
    def __init__(self):
        self.nodes = 0


def weighted_qcnf_sat(inst: CnfInstance, stats: SatStats | None = None) -> frozenset | None:
    """A set of at most k variables whose being true satisfies the formula.

    Everything outside the returned set is false. None means no such
    assignment exists. Branches only on positive literals of the first
    falsified clause, in clause order; the first assignment found wins.
    """
    if stats is None:
        stats = SatStats()

    def falsified(true_vars: frozenset):
        for clause in inst.clauses:
            ok = False
            for lit in clause:
                if (lit > 0 and lit in true_vars) or (lit < 0 and -lit not in true_vars):
                    ok = True
                    break
            if not ok:
                return clause
        return None

    def search(true_vars: frozenset) -> frozenset | None:
        stats.nodes += 1
        clause = falsified(true_vars)
        if clause is None:
            return true_vars
        if len(true_vars) == inst.k:
            return None
        for lit in clause:
            if lit > 0:  # positive literals of a falsified clause are unset
                found = search(true_vars | {lit})
                if found is not None:
                    return found
        return None

    return search(frozenset())


def parse_dimacs_cnf(text: str) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Read a DIMACS CNF document: "p cnf VARS CLAUSES" then 0-ended clauses."""
    num_vars = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError(f"line {lineno}: malformed problem line")
            num_vars = int(parts[2])
            continue
        if num_vars is None:
            raise GraphFormatError(f"line {lineno}: clause before problem line")
        try:
            tokens.extend(int(t) for t in line.split())
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer literal")
    if num_vars is None:
        raise GraphFormatError("missing problem line")
    clauses = []
    current: list[int] = []
    for t in tokens:
        if t == 0:
            if not current:
                raise GraphFormatError("empty clause in CNF input")
            clauses.append(tuple(current))
            current = []
        else:
            current.append(t)
    if current:
        raise GraphFormatError("unterminated clause at end of CNF input")
    return num_vars, tuple(clauses)
