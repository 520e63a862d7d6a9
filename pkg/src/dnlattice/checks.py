"""Named verification checks and the rationality verdict built from them.

Check ids follow the numbering of the published results they certify; the
id is the only place that numbering appears.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable

from .cohomology import is_coflabby, is_flabby, tate_minus1, worker_count
from .group import Subgroup, klein_subgroup
from .lattices import aug_tensor_square, is_faithful, is_valid
from .linalg import AbelianInvariants, circulant, circulant_identity_vectors, det, inverse_unimodular
from .relmod import relation_module, rewriting_matches_transcription
from . import witnesses as W

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# I_G tensor I_G has rank (2n-1)^2; its coflabby test is kept to desk scale.
TENSOR_SQUARE_MAX_N = 5
SCHANUEL_MAX_N = 5


@dataclass(frozen=True)
class CheckResult:
    id: str
    n: int
    status: str
    detail: str
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return asdict(self)


class CheckFailed(AssertionError):
    pass


def require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


def _odd(n: int) -> str | None:
    return None if n >= 3 and n % 2 else "requires odd n >= 3"


def _any(n: int) -> str | None:
    return None if n >= 2 else "requires n >= 2"


def _even(n: int) -> str | None:
    return None if n >= 2 and n % 2 == 0 else "requires even n >= 2"


def _upto(limit: int) -> Callable[[int], str | None]:
    def check(n: int) -> str | None:
        if n < 2:
            return "requires n >= 2"
        return None if n <= limit else f"limited to n <= {limit} at desk scale"
    return check


# individual checks ----------------------------------------------------------

def _check_iso(w: W.IsoWitness, name: str) -> int:
    require(W.verify_equivariant(w.map), f"{name}: map is not equivariant")
    d = w.det
    require(abs(d) == 1, f"{name}: determinant {d} is not a unit")
    return d


def run_34(n: int) -> str:
    w = W.stably_permutation_plus(n)
    d = _check_iso(w, "M~+ + Z")
    require(d == 1, f"determinant is {d}, expected 1")
    return f"M~+ + Z = Z[G/<s>] + Z[G/<t>], det {d}"


def run_35(n: int) -> str:
    w = W.stably_permutation_minus(n)
    d = _check_iso(w, "M~- + Z[G/<t>]")
    return f"M~- + Z[G/<t>] = Z[G] + Z, det {d}"


def run_36(n: int) -> str:
    first, second = circulant_identity_vectors(n)
    d1, d2 = det(circulant(first)), det(circulant(second))
    require(d1 == (n - 1) // 2, f"first circulant determinant {d1}, expected {(n - 1) // 2}")
    require(d2 == -1, f"second circulant determinant {d2}, expected -1")
    return f"circulant determinants {d1} and {d2}"


def run_37(n: int) -> str:
    w = W.mtilde_sum_permutation(n)
    d = _check_iso(w, "M~+ + M~-")
    require(d == -1, f"determinant is {d}, expected -1")
    return f"M~+ + M~- = Z[G] + Z[G/<s>], det {d}"


def _nonsplit(seqs: dict[str, W.ShortExactSequence]) -> None:
    for name, s in seqs.items():
        fail = W.ses_failure(s)
        require(fail is None, f"{name}: {fail}")
        require(not W.has_section(s), f"{name}: unexpectedly splits")


def run_38(n: int) -> str:
    plus, minus = W.norm_quotient_sequences(n)
    _nonsplit({"N- -> M+ -> Z": plus, "N+ -> M- -> Z-": minus})
    return "N- -> M+ -> Z and N+ -> M- -> Z- exact and non-split"


def run_39(n: int) -> str:
    plus, minus = W.mtilde_sequences(n)
    _nonsplit({"N- -> M~+ -> Z[G/<s>]": plus, "N+ -> M~- -> Z[G/<s>]": minus})
    return "N- -> M~+ -> Z[G/<s>] and N+ -> M~- -> Z[G/<s>] exact and non-split"


def run_310(n: int) -> str:
    s = W.group_ring_sequence(n)
    _nonsplit({"N+ + N- -> Z[G] -> Z[G/<s>]": s})
    d = det(W.group_ring_kernel_matrix(n))
    require(d == 1, f"kernel coordinate matrix has determinant {d}, expected 1")
    return "N+ + N- -> Z[G] -> Z[G/<s>] exact and non-split, det P = 1"


def run_311(n: int) -> str:
    iso, s1, s2 = W.augmentation_ideal_splitting(n)
    _check_iso(iso, "M- + N- -> I_G")
    for name, s in (("M+ -> Z[G] -> M-", s1), ("M~+ -> Z[G] -> N-", s2),
                    ("M+ + M~+ -> Z[G]^2 -> I_G", W.free_pair_sequence(n))):
        fail = W.ses_failure(s)
        require(fail is None, f"{name}: {fail}")
    return "I_G = M- + N-; M+ -> Z[G] -> M-, M~+ -> Z[G] -> N-, M+ + M~+ -> Z[G]^2 -> I_G exact"


def run_41(n: int) -> str:
    r = relation_module(n)
    require(is_valid(r), "relation module violates the dihedral relations")
    require(is_faithful(r), "relation module is not faithful")
    return f"R^ab has rank {r.rank} and is faithful"


def run_421(n: int) -> str:
    fail = W.ses_failure(W.fox_sequence(n))
    require(fail is None, f"R^ab -> Z[G]^2 -> I_G: {fail}")
    return "image of the Fox embedding equals the kernel of nu"


def run_423(n: int) -> str:
    c = is_coflabby(relation_module(n))
    require(c.holds, f"H^1 of R^ab nonzero: {c}")
    if n <= TENSOR_SQUARE_MAX_N:
        t = is_coflabby(aug_tensor_square(n))
        require(t.holds, f"H^1 of I_G(x)I_G nonzero: {t}")
        return "R^ab and I_G(x)I_G coflabby"
    return f"R^ab coflabby (I_G(x)I_G checked only for n <= {TENSOR_SQUARE_MAX_N})"


def _klein_h_minus1(n: int) -> tuple[Subgroup, AbelianInvariants]:
    k = klein_subgroup(n)
    return k, tate_minus1(relation_module(n), k)


def run_44(n: int) -> str:
    r = relation_module(n)
    co = is_coflabby(r)
    require(co.holds, f"R^ab not coflabby: {co}")
    fl = is_flabby(r)
    if n % 2:
        require(fl.holds, f"R^ab not flabby: {fl}")
        return "R^ab flabby and coflabby"
    require(not fl.holds, "R^ab is flabby for even n")
    k, g = _klein_h_minus1(n)
    require(str(g) == "Z/2", f"H^-1({k.label}) = {g}, expected Z/2")
    return (f"R^ab coflabby, not flabby: H^-1({k.label}, R^ab) = Z/2; "
            f"Klein subgroup <s^{n // 2}, t> gives Z/2")


def run_47(n: int) -> str:
    require(rewriting_matches_transcription(n), "rewritten action differs from the written-out matrices")
    return "rewritten sigma and tau agree with the written-out action"


def run_48(n: int) -> str:
    sig, tau = W.reordered_relation_action(n)
    exp_sig, exp_tau = W.expected_reordered_action(n)
    require(sig == exp_sig, "reordered sigma is not diag(A, A, 1)")
    require(tau == exp_tau, "reordered tau is not [[AB, 0, 1], [C, B, 0], [0, 0, -1]]")
    w = W.relation_module_decomposition(n)
    d = _check_iso(w, "R^ab -> M+ + M~+")
    inv = inverse_unimodular(w.map.mat)
    r, dst = w.map.src, w.map.dst
    require(w.map.mat @ r.sigma @ inv == dst.sigma, "conjugated sigma is not diag(A, A~)")
    require(w.map.mat @ r.tau @ inv == dst.tau, "conjugated tau is not diag(B, B~)")
    comp = W.relation_module_stably_permutation(n)
    dc = _check_iso(comp, "R^ab + Z -> Z[G/<t>] + Z[G/<s>] + Z[G/<t>]")
    return f"R^ab = M+ + M~+ (det {d}); R^ab + Z = Z[G/<s>] + Z[G/<t>]^2 (det {dc})"


def run_48_split(n: int) -> str:
    s = W.relation_module_sequence(n)
    fail = W.ses_failure(s)
    require(fail is None, f"M+ -> R^ab -> M~+: {fail}")
    require(W.has_section(s), "M+ -> R^ab -> M~+ does not split")
    return "M+ -> R^ab -> M~+ exact and split"


def run_schanuel(n: int) -> str:
    rep = W.schanuel_consistency(n)
    require(rep.left_rank == rep.right_rank,
            f"ranks differ: {rep.left_rank} vs {rep.right_rank}")
    require(rep.profiles_equal, f"cohomology profiles differ at {rep.first_difference}")
    return f"consistency: both sides rank {rep.left_rank}, cohomology profiles equal"


@dataclass(frozen=True)
class CheckSpec:
    id: str
    applicable: Callable[[int], str | None]
    run: Callable[[int], str]
    summary: str


REGISTRY: dict[str, CheckSpec] = {c.id: c for c in [
    CheckSpec("3.4", _odd, run_34, "M~+ + Z is permutation"),
    CheckSpec("3.5", _odd, run_35, "M~- + Z[G/<t>] = Z[G] + Z"),
    CheckSpec("3.6", _odd, run_36, "circulant determinant identities"),
    CheckSpec("3.7", _odd, run_37, "M~+ + M~- = Z[G] + Z[G/<s>]"),
    CheckSpec("3.8", _odd, run_38, "non-split sequences through M+ and M-"),
    CheckSpec("3.9", _odd, run_39, "non-split sequences through M~+ and M~-"),
    CheckSpec("3.10", _odd, run_310, "non-split N+ + N- -> Z[G] -> Z[G/<s>]"),
    CheckSpec("3.11", _odd, run_311, "I_G = M- + N- and its sequences"),
    CheckSpec("4.1", _any, run_41, "R^ab is a faithful lattice"),
    CheckSpec("4.2.1", _any, run_421, "R^ab -> Z[G]^2 -> I_G exact"),
    CheckSpec("4.2.3", _any, run_423, "R^ab and I_G(x)I_G coflabby"),
    CheckSpec("4.4", _any, run_44, "flabby / coflabby status of R^ab"),
    CheckSpec("4.7", _any, run_47, "rewriting reproduces the action on R^ab"),
    CheckSpec("4.8", _odd, run_48, "R^ab = M+ + M~+"),
    CheckSpec("4.8-split", _odd, run_48_split, "M+ -> R^ab -> M~+ splits"),
    CheckSpec("schanuel", _upto(SCHANUEL_MAX_N), run_schanuel, "Schanuel rank/cohomology consistency"),
]}

ALIASES = {"1.3": "4.8", "1.4": "4.8"}


def check_ids() -> list[str]:
    return list(REGISTRY)


def resolve(check_id: str) -> CheckSpec:
    key = ALIASES.get(check_id, check_id)
    try:
        return REGISTRY[key]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}; known: {', '.join(list(REGISTRY) + list(ALIASES))}") from None


def run_check(check_id: str, n: int) -> CheckResult:
    spec = resolve(check_id)
    reason = spec.applicable(n)
    if reason:
        return CheckResult(spec.id, n, SKIPPED, reason, 0)
    start = time.perf_counter()
    try:
        detail = spec.run(n)
        status = PASS
    except CheckFailed as exc:
        detail, status = str(exc), FAIL
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return CheckResult(spec.id, n, status, detail, elapsed)


def _job(args: tuple[str, int]) -> CheckResult:
    return run_check(*args)


def run_suite(n_min: int, n_max: int, ids: list[str] | None = None,
              workers: int | None = None) -> list[CheckResult]:
    """Every check for every n in range, ordered by (n, registry order)."""
    if n_min < 2 or n_min > n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    ids = ids or check_ids()
    jobs = [(cid, n) for n in range(n_min, n_max + 1) for cid in ids]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_job, jobs))
    return [_job(j) for j in jobs]


# witness export ------------------------------------------------------

WITNESS_EXPORTS: dict[str, tuple[Callable[[int], W.IsoWitness], str]] = {
    "3.4": (W.stably_permutation_plus, "Theorem 3.4: M~+ + Z = Z[D_n/<s>] + Z[D_n/<t>]"),
    "3.5": (W.stably_permutation_minus, "Theorem 3.5: M~- + Z[D_n/<t>] = Z[D_n] + Z"),
    "3.7": (W.mtilde_sum_permutation, "Theorem 3.7: M~+ + M~- = Z[D_n] + Z[D_n/<s>]"),
    "3.11": (lambda n: W.augmentation_ideal_splitting(n)[0], "Lemma 3.11: I_G = M- + N-"),
    "4.8": (W.relation_module_decomposition, "Theorem 4.8: R^ab = M+ + M~+"),
}


def witness_for_export(check_id: str, n: int) -> W.IsoWitness:
    """The isomorphism witness behind a check, carrying its provenance string."""
    key = ALIASES.get(check_id, check_id)
    if key not in WITNESS_EXPORTS:
        raise KeyError(f"no exportable witness for {check_id!r}; known: {', '.join(WITNESS_EXPORTS)}")
    build, provenance = WITNESS_EXPORTS[key]
    w = build(n)
    return W.IsoWitness(w.map, provenance)


# verdict ---------------------------------------------------------------

class VerdictError(RuntimeError):
    """Computed evidence disagrees with the odd/even rule."""


@dataclass(frozen=True)
class Verdict:
    n: int
    stably_rational: bool
    retract_rational_over_infinite_k: bool
    evidence: list[CheckResult] = field(default_factory=list)
    citations: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "stably_rational": self.stably_rational,
            "retract_rational_over_infinite_k": self.retract_rational_over_infinite_k,
            "evidence": [e.as_dict() for e in self.evidence],
            "citations": list(self.citations),
        }


def _timed(check_id: str, n: int, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return CheckResult(check_id, n, PASS if ok else FAIL, detail, elapsed)


def verdict(n: int) -> Verdict:
    """Decide stable rationality of the invariant field from recomputed lattice evidence.

    Flabby R^ab plus an explicit permutation decomposition gives a positive
    answer; a nonzero H^-1 on the Klein subgroup with R^ab coflabby gives a
    negative one. The odd/even rule is then asserted, not assumed.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    r = relation_module(n)
    fl = is_flabby(r)
    flabby = _timed("is_flabby", n, lambda: (fl.holds, f"R^ab flabby: {fl}"))
    evidence = [flabby]
    if fl.holds:
        if n % 2 == 0:
            raise VerdictError(f"R^ab is flabby at even n={n}")
        chain = [replace(run_check("4.8", n), id="witness_thm48"),
                 replace(run_check("3.4", n), id="witness_thm34")]
        evidence = chain + evidence
        if not all(c.passed for c in chain):
            raise VerdictError(f"permutation decomposition failed at n={n}: "
                               + "; ".join(c.detail for c in chain if not c.passed))
        stable = True
    else:
        k, g = klein_subgroup(n), None
        if n % 2 == 0:
            g = tate_minus1(r, k)
        klein = CheckResult("tate_minus1", n, FAIL, f"flabby test failed at {fl.subgroup}: {fl.group}")
        if g is not None:
            klein = _timed("tate_minus1", n, lambda: (str(g) == "Z/2",
                                                    f"H^-1({k.label}, R^ab) = {g}: Klein subgroup <s^{n // 2}, t>"))
        co = is_coflabby(r)
        cof = _timed("is_coflabby", n, lambda: (co.holds, f"R^ab coflabby: {co}"))
        evidence = [klein, cof]
        if not (klein.passed and cof.passed):
            raise VerdictError(f"R^ab is not flabby at n={n} but the Klein evidence is incomplete: "
                               + "; ".join(e.detail for e in evidence if not e.passed))
        stable = False
    if stable != (n % 2 == 1):
        raise VerdictError(f"evidence says stably_rational={stable} at n={n}, against the parity rule")
    if stable:
        citations = [
            "Theorem 1.3: K(R^ab)^{D_n} is rational over k for odd n >= 3",
            "Theorem 1.4: k(R^ab)^{D_n} = k(D_n)(t) for odd n",
            "Theorem 4.5: stably rational over k iff n is odd",
            "Theorem 4.8: R^ab = M+ + M~+ and R^ab + Z = Z[D_n/<s>] + Z[D_n/<t>]^2",
        ]
    else:
        citations = [
            "Theorem 4.5: stably rational over k iff n is odd; for even n and infinite k, "
            "not retract rational",
            "Lemma 4.4: for even n, R^ab is coflabby but not flabby",
        ]
        if n == 2:
            citations.append("Theorem 1.5: k(R^ab)^{D_2} itself is k-rational (cited, not computed)")
    return Verdict(n, stable, stable, evidence, citations)


__all__ = [
    "ALIASES",
    "CheckResult",
    "REGISTRY",
    "Verdict",
    "VerdictError",
    "WITNESS_EXPORTS",
    "check_ids",
    "run_check",
    "run_suite",
    "verdict",
    "witness_for_export",
]
