"""Homology of an equivariant chain complex, with explicit labeled bases.

One uniform algorithm serves every complex: H0 is the cokernel of the
degree-1 differential, H2 the kernel lattice of the degree-2 one, and H1
is computed by rewriting the image of the degree-2 differential in the
coordinates of a kernel lattice basis of the degree-1 differential and
taking the cokernel there.  All generator vectors are carried back to the
chain groups and expressed over the generator labels.

``verify_basis`` checks a candidate family of labeled chains against a
computed group: every candidate must be a cycle and the candidates'
classes must generate the homology group; generation is decided by a
Smith-normal-form cokernel computation, so it is exact and insensitive to
the (non-unique) choice of transform matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .gcw import EquivariantComplex, InvalidComplexError, assemble_differential, chain_rank, validate
from .intlinalg import IntegerMatrix, cokernel, kernel_basis, solve_integer, smith_normal_form

#: A chain over the degree-d generators: ((label, coefficient), ...).
Chain = tuple[tuple[str, int], ...]


class UnknownGeneratorError(KeyError):
    pass


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]
    basis: tuple[Chain, ...]
    torsion_basis: tuple[Chain, ...]

    def iso_type(self) -> tuple[int, tuple[int, ...]]:
        return self.free_rank, self.torsion

    def describe(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyReport:
    group_name: str
    groups: tuple[HomologyGroup, HomologyGroup, HomologyGroup]  # degrees 0, 1, 2
    labels: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]
    d1: IntegerMatrix
    d2: IntegerMatrix
    invariant_factors_d1: tuple[int, ...]
    invariant_factors_d2: tuple[int, ...]

    @property
    def chain_ranks(self) -> tuple[int, int, int]:
        return tuple(len(ls) for ls in self.labels)  # type: ignore[return-value]

    def group(self, degree: int) -> HomologyGroup:
        return self.groups[degree]

    def euler_identity_holds(self) -> bool:
        c0, c1, c2 = self.chain_ranks
        h = [g.free_rank for g in self.groups]
        return c0 - c1 + c2 == h[0] - h[1] + h[2]


def _chain(labels: Sequence[str], vector: Sequence[int]) -> Chain:
    return tuple((lab, v) for lab, v in zip(labels, vector) if v)


def _chains_from_columns(labels: Sequence[str], m: IntegerMatrix) -> tuple[Chain, ...]:
    return tuple(_chain(labels, m.col(j)) for j in range(m.cols))


def compute_homology(complex: EquivariantComplex) -> HomologyReport:
    violations = validate(complex)
    if violations:
        raise InvalidComplexError(violations)

    labels = tuple(tuple(lab.name for lab in chain_rank(complex, d)[1]) for d in (0, 1, 2))
    d1 = assemble_differential(complex, 1)
    d2 = assemble_differential(complex, 2)

    # Degree 0: plain cokernel of the degree-1 differential.
    cok0 = cokernel(d1)
    h0 = HomologyGroup(
        degree=0,
        free_rank=cok0.free_rank,
        torsion=cok0.torsion,
        basis=_chains_from_columns(labels[0], cok0.free_generators),
        torsion_basis=_chains_from_columns(labels[0], cok0.torsion_generators),
    )

    # Degree 2: kernel lattice of the degree-2 differential, always free.
    k2 = kernel_basis(d2)
    h2 = HomologyGroup(
        degree=2,
        free_rank=k2.cols,
        torsion=(),
        basis=_chains_from_columns(labels[2], k2),
        torsion_basis=(),
    )

    # Degree 1: express the image of d2 in kernel coordinates of d1 and
    # take the cokernel there; generators return through the kernel basis.
    k1 = kernel_basis(d1)
    x = solve_integer(k1, d2)
    if x is None:
        raise InvalidComplexError(["differentials do not compose to zero"])
    cok1 = cokernel(x)
    h1 = HomologyGroup(
        degree=1,
        free_rank=cok1.free_rank,
        torsion=cok1.torsion,
        basis=_chains_from_columns(labels[1], k1 @ cok1.free_generators),
        torsion_basis=_chains_from_columns(labels[1], k1 @ cok1.torsion_generators),
    )

    report = HomologyReport(
        group_name=complex.group_name,
        groups=(h0, h1, h2),
        labels=labels,
        d1=d1,
        d2=d2,
        invariant_factors_d1=smith_normal_form(d1).invariant_factors,
        invariant_factors_d2=smith_normal_form(d2).invariant_factors,
    )
    if not report.euler_identity_holds():
        raise AssertionError(f"Euler identity violated for {complex.group_name}")
    return report


@dataclass(frozen=True)
class BasisVerdict:
    accepted: bool
    detail: str

    @property
    def verdict(self) -> str:
        return "ACCEPT" if self.accepted else "REJECT"

    def __bool__(self) -> bool:
        return self.accepted


def chain_vector(report: HomologyReport, degree: int, candidate: Mapping[str, int] | Chain) -> list[int]:
    labels = report.labels[degree]
    items = candidate.items() if isinstance(candidate, Mapping) else candidate
    vector = [0] * len(labels)
    for label, coeff in items:
        try:
            vector[labels.index(label)] += int(coeff)
        except ValueError:
            raise UnknownGeneratorError(
                f"{label!r} is not a degree-{degree} generator of {report.group_name}"
            ) from None
    return vector


def verify_basis(
    report: HomologyReport, degree: int, candidates: Sequence[Mapping[str, int] | Chain]
) -> BasisVerdict:
    """ACCEPT iff every candidate is a cycle and their classes generate H_degree."""
    if degree not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    vectors = [chain_vector(report, degree, c) for c in candidates]
    n = len(report.labels[degree])
    cand = IntegerMatrix.from_rows(
        [[v[i] for v in vectors] for i in range(n)], cols=len(vectors)
    ) if vectors else IntegerMatrix.zeros(n, 0)

    differential = {1: report.d1, 2: report.d2}.get(degree)
    if differential is not None:
        image = differential @ cand
        for j in range(cand.cols):
            if any(image.col(j)):
                return BasisVerdict(False, f"candidate {j + 1} is not a cycle")

    # Coordinates of the cycle lattice: identity in degree 0, else a kernel
    # lattice basis of the differential.
    if degree == 0:
        cand_coords = cand
        boundary_coords: IntegerMatrix | None = report.d1
    else:
        kernel = kernel_basis(differential)  # type: ignore[arg-type]
        cand_coords = solve_integer(kernel, cand)
        if cand_coords is None:
            return BasisVerdict(False, "candidate lies outside the cycle lattice")
        if degree == 1:
            boundary_coords = solve_integer(kernel, report.d2)
            if boundary_coords is None:
                raise InvalidComplexError(["differentials do not compose to zero"])
        else:
            boundary_coords = None

    stacked = cand_coords if boundary_coords is None else cand_coords.hstack(boundary_coords)
    cok = cokernel(stacked)
    if cok.free_rank or cok.torsion:
        missing = []
        if cok.free_rank:
            missing.append(f"free rank {cok.free_rank}")
        if cok.torsion:
            missing.append(f"torsion {list(cok.torsion)}")
        return BasisVerdict(False, "candidates do not generate: quotient has " + ", ".join(missing))
    return BasisVerdict(True, "candidates are cycles and generate the group")


# ---------------------------------------------------------------------------
# Rendering


def format_chain(chain: Chain) -> str:
    if not chain:
        return "0"
    parts = []
    for label, coeff in chain:
        if coeff == 1:
            term = label
        elif coeff == -1:
            term = f"-{label}"
        else:
            term = f"{coeff}*{label}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


def _group_json(g: HomologyGroup) -> dict:
    return {
        "degree": g.degree,
        "free_rank": g.free_rank,
        "torsion": list(g.torsion),
        "basis": [[[lab, c] for lab, c in chain] for chain in g.basis],
        "torsion_basis": [[[lab, c] for lab, c in chain] for chain in g.torsion_basis],
    }


def report_to_json_dict(report: HomologyReport) -> dict:
    return {
        "group": report.group_name,
        "chain_ranks": list(report.chain_ranks),
        "generators": [list(ls) for ls in report.labels],
        "homology": [_group_json(g) for g in report.groups],
        "differentials": {
            "d1": {"rows": report.d1.rows, "cols": report.d1.cols, "entries": report.d1.to_rows()},
            "d2": {"rows": report.d2.rows, "cols": report.d2.cols, "entries": report.d2.to_rows()},
        },
        "invariant_factors": {
            "d1": list(report.invariant_factors_d1),
            "d2": list(report.invariant_factors_d2),
        },
    }


def report_to_json(report: HomologyReport) -> str:
    return json.dumps(report_to_json_dict(report), indent=2)


def basis_cell(group: HomologyGroup) -> str:
    """One aligned-table cell listing torsion generators first, then free ones."""
    chains = list(group.torsion_basis) + list(group.basis)
    if not chains:
        return "-"
    return " ".join(f"[{format_chain(c)}]" for c in chains)
