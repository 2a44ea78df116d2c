"""``hermlat`` command-line front end.

Every subcommand builds a :class:`Report` and prints it either as aligned
text or as ``key=value`` lines (``--format kv``).  Exit codes: 0 success,
1 a checked hypothesis failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import catalog as catalog_mod
from . import definite, embeddings, general_type, hermitian, latticefile, quadratic, singularity
from .hermitian import HermitianLattice
from .latticefile import LatticeFileError

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
LARGE_RANK = 16          # root enumeration above this rank needs --allow-large-rank


class InputError(Exception):
    pass


def fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return json.dumps(_plain(value), separators=(",", ":"))
    return str(value)


def _plain(x: Any) -> Any:
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


@dataclasses.dataclass
class Report:
    title: str
    items: list[tuple[str, str]] = dataclasses.field(default_factory=list)
    summary: str = ""

    def add(self, key: str, value: Any) -> None:
        self.items.append((key, fmt(value)))

    def render(self, style: str) -> str:
        lines = []
        if style == "kv":
            lines.append(f"command={self.title}")
            lines += [f"{k}={v}" for k, v in self.items]
            if self.summary:
                lines.append(f"summary={self.summary}")
        else:
            lines.append(self.title)
            width = max((len(k) for k, _ in self.items), default=0)
            lines += [f"  {k:<{width}}  {v}" for k, v in self.items]
            if self.summary:
                lines.append(self.summary)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers

def _load(path: str) -> latticefile.LatticeFile:
    return latticefile.load_lattice(path)


def _as_quadratic(lf: latticefile.LatticeFile) -> quadratic.QuadraticLattice:
    if isinstance(lf.lattice, HermitianLattice):
        return quadratic.trace_form(lf.lattice)
    return lf.lattice


def _definite(Q: quadratic.QuadraticLattice, what: str) -> int:
    s = quadratic.is_definite(Q)
    if s == 0:
        raise InputError(f"{what}: lattice is indefinite; this command needs a definite lattice")
    return s


def _describe_quadratic(rep: Report, Q: quadratic.QuadraticLattice, prefix: str = "") -> None:
    rep.add(f"{prefix}rank", Q.rank)
    integral = quadratic.is_integral(Q)
    rep.add(f"{prefix}integral", integral)
    rep.add(f"{prefix}even", quadratic.is_even(Q))
    rep.add(f"{prefix}signature", str(quadratic.signature(Q)))
    det = quadratic.determinant(Q)
    rep.add(f"{prefix}det", det)
    if integral and det != 0:
        disc = quadratic.discriminant_group(Q)
        rep.add(f"{prefix}discriminant_group", str(disc))
        rep.add(f"{prefix}discriminant_order", disc.order)
        rep.add(f"{prefix}ell", disc.length)
    rep.add(f"{prefix}unimodular", integral and abs(det) == 1)


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args) -> tuple[Report, int]:
    lf = _load(args.file)
    L = lf.lattice
    rep = Report("analyze")
    rep.add("kind", lf.kind)
    if L.name:
        rep.add("name", L.name)
    if isinstance(L, HermitianLattice):
        rep.add("d", L.d)
        rep.add("rank", L.rank)
        rep.add("integral", hermitian.is_integral(L))
        rep.add("even", hermitian.is_even(L))
        rep.add("signature", "({},{})".format(*hermitian.signature(L)))
        rep.add("trace_det", hermitian.trace_determinant(L))
        _describe_quadratic(rep, quadratic.trace_form(L), prefix="trace.")
    else:
        _describe_quadratic(rep, L)
    return rep, EXIT_OK


def cmd_trace_form(args) -> tuple[str, int]:
    lf = _load(args.file)
    if not isinstance(lf.lattice, HermitianLattice):
        raise InputError(f"{args.file}: trace-form needs a hermitian lattice file")
    Q = quadratic.trace_form(lf.lattice)
    Q = quadratic.lattice(Q.gram, f"{lf.lattice.name}_Q" if lf.lattice.name else "")
    text = latticefile.dumps_lattice(Q)
    if args.output:
        Path(args.output).write_text(text)
        return f"wrote {args.output}\n", EXIT_OK
    return text, EXIT_OK


def cmd_roots(args) -> tuple[Report, int]:
    Q = _as_quadratic(_load(args.file))
    s = _definite(Q, args.file)
    if Q.rank > LARGE_RANK and not args.allow_large_rank:
        raise InputError(f"rank {Q.rank} > {LARGE_RANK}: enumeration may take a long time; "
                         "pass --allow-large-rank to proceed")
    if Q.rank > LARGE_RANK:
        print(f"warning: enumerating vectors in rank {Q.rank}, this can be slow", file=sys.stderr)
    norm = args.norm if args.norm is not None else 2 * s
    sv = definite.short_vectors(Q, norm)
    rep = Report("roots")
    rep.add("rank", Q.rank)
    rep.add("definite", "positive" if s > 0 else "negative")
    rep.add("norm", norm)
    rep.add("count", sv.count_total)
    if args.list:
        for i, v in enumerate(sv.vectors):
            rep.add(f"vector[{i}]", v)
    return rep, EXIT_OK


def cmd_identify(args) -> tuple[Report, int]:
    Q = _as_quadratic(_load(args.file))
    _definite(Q, args.file)
    rs = definite.root_system_identify(Q)
    rep = Report("identify")
    rep.add("rank", Q.rank)
    rep.add("root_count", rs.root_count)
    rep.add("components", " + ".join(rs.components) if rs.components else "0")
    rep.add("root_rank", rs.root_rank)
    rep.add("index", rs.index if rs.index is not None else "n/a")
    rep.add("root_lattice", not rs.has_remainder)
    return rep, EXIT_OK


def _read_basis(path: str) -> list[list[int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return latticefile.parse_int_vectors(latticefile.loads_json(text))
    except LatticeFileError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_complement(args) -> tuple[Report, int]:
    Q = _as_quadratic(_load(args.ambient))
    basis = _read_basis(args.sub_basis)
    try:
        sub = embeddings.Sublattice(Q, tuple(map(tuple, basis)))
    except ValueError as exc:
        raise InputError(f"{args.sub_basis}: {exc}") from None
    comp = embeddings.orthogonal_complement(sub)
    C = comp.lattice()
    rep = Report("complement")
    rep.add("sub_rank", sub.rank)
    rep.add("sub_primitive", embeddings.is_primitive(sub))
    rep.add("complement_rank", comp.rank)
    rep.add("basis", [list(v) for v in comp.basis])
    rep.add("gram", C.gram)
    if comp.rank:
        _describe_quadratic(rep, C, prefix="complement.")
    if args.output:
        Path(args.output).write_text(latticefile.dumps_lattice(C))
        rep.add("written", args.output)
    return rep, EXIT_OK


def cmd_isometric(args) -> tuple[Report, int]:
    Q1 = _as_quadratic(_load(args.file1))
    Q2 = _as_quadratic(_load(args.file2))
    _definite(Q1, args.file1)
    _definite(Q2, args.file2)
    t = definite.find_isometry(Q1, Q2)
    rep = Report("isometric")
    rep.add("isometric", t is not None)
    if t is not None:
        rep.add("transform", t)
    return rep, EXIT_OK if t is not None else EXIT_FAILED


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--exponents: expected comma-separated integers, got {text!r}") from None


def cmd_age(args) -> tuple[Report, int]:
    p = singularity.EigenvalueProfile(args.order, tuple(x % args.order for x in _int_list(args.exponents)))
    a = singularity.age(p)
    rep = Report("age")
    rep.add("order", p.order)
    rep.add("exponents", list(p.exponents))
    rep.add("age", a)
    rep.add("quasi_reflection", singularity.is_quasi_reflection(p))
    rep.add("reflection", singularity.is_reflection(p))
    rep.add("age_at_least_one", a >= 1)
    return rep, EXIT_OK


def cmd_rst_scan(args) -> tuple[Report, int]:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise InputError("need 1 <= --n-min <= --n-max")
    rep = Report("rst-scan")
    below = []
    for n in range(args.n_min, args.n_max + 1):
        res = singularity.rst_min_age(n)
        rep.add(f"n{n}.min_age", res.minimum)
        rep.add(f"n{n}.witness", str(res.witness))
        rep.add(f"n{n}.witness_count", len(res.witnesses))
        rep.add(f"n{n}.at_least_one", res.canonical)
        if not res.canonical:
            below.append(f"n={n}: min age {res.minimum} < 1")
    rep.summary = "; ".join(below) if below else "all minimum ages >= 1"
    return rep, EXIT_FAILED if below else EXIT_OK


def cmd_seisu(args) -> tuple[Report, int]:
    if args.max < 5:
        raise InputError("--max must be at least 5")
    t0 = time.perf_counter()
    res = singularity.seisu_verify(args.max)
    rep = Report("seisu")
    rep.add("r_max", res.r_max)
    rep.add("pairs_checked", res.pairs_checked)
    rep.add("violations", len(res.violations))
    r, k2, s = res.tightest
    rep.add("tightest", f"r={r} k2={k2} sum={s}")
    rep.add("middle_gaps", list(res.middle_gaps))
    for r, ws in sorted(res.witness_table.items()):
        rep.add(f"middle_coprimes[{r}]", list(ws))
    if args.timing:
        rep.add("seconds", f"{time.perf_counter() - t0:.3f}")
    rep.summary = f"{len(res.violations)} violations"
    return rep, EXIT_OK if res.ok else EXIT_FAILED


# general-type -------------------------------------------------------------

def _field_matrix(obj: Any, d: int, key: str) -> tuple:
    if not isinstance(obj, list):
        raise LatticeFileError(f"{key}: expected a list of rows")
    rows = []
    for i, row in enumerate(obj):
        if not isinstance(row, list):
            raise LatticeFileError(f"{key}[{i}]: expected a list")
        rows.append(tuple(latticefile.parse_field_element(x, d, f"{key}[{i}][{j}]")
                          for j, x in enumerate(row)))
    return tuple(rows)


def _opt_int(data: dict, key: str):
    v = data.get(key)
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, int):
        raise LatticeFileError(f"{key}: expected an integer")
    return v


def case_from_json(data: Any) -> general_type.EmbeddingCase:
    """Embedding case file: ambient ("gaussian" | "eisenstein" | lattice object),
    sub_gram, embedding, expected_complement, n, optional expected weights."""
    if not isinstance(data, dict):
        raise LatticeFileError("top level: expected an object")
    amb = data.get("ambient")
    if amb == "gaussian":
        M = catalog_mod.gaussian_ambient()
    elif amb == "eisenstein":
        M = catalog_mod.eisenstein_ambient()
    elif isinstance(amb, dict):
        lf = latticefile.parse_lattice(amb)
        if not isinstance(lf.lattice, HermitianLattice):
            raise LatticeFileError("ambient: expected a hermitian lattice")
        M = lf.lattice
    else:
        raise LatticeFileError("ambient: expected 'gaussian', 'eisenstein' or a lattice object")
    d = M.d
    label = data.get("expected_complement")
    if not isinstance(label, str):
        raise LatticeFileError("expected_complement: expected a lattice label such as 'A2(-1)^2'")
    n = _opt_int(data, "n")
    if n is None:
        raise LatticeFileError("n: required")
    embedding = _field_matrix(data.get("embedding"), d, "embedding")
    if any(len(v) != M.rank for v in embedding):
        raise LatticeFileError(f"embedding: vectors must have {M.rank} coordinates")
    return general_type.EmbeddingCase(
        name=str(data.get("name", "file")), field_d=d, ambient=M,
        sub_gram=_field_matrix(data.get("sub_gram"), d, "sub_gram"),
        embedding=embedding,
        expected_complement=label,
        expected_weight=_opt_int(data, "expected_weight"),
        expected_root_weight=_opt_int(data, "expected_root_weight"),
        n=n,
    )


def _verdict_report(rep: Report, v: general_type.Verdict, prefix: str = "") -> None:
    rep.add(f"{prefix}status", v.status.value)
    for key in ("signature", "n", "root_system", "root_count", "weight", "root_weight"):
        if key in v.values:
            val = v.values[key]
            rep.add(f"{prefix}{key}", "({},{})".format(*val) if key == "signature" else val)
    comp = v.values.get("comparison")
    if comp is not None:
        for res in comp.results:
            roots = res.root_count if res.root_count is not None else "unverified"
            rep.add(f"{prefix}candidate[{res.candidate.display}]", roots)
    for i, c in enumerate(v.checks):
        rep.add(f"{prefix}check[{i}]", f"{'ok' if c.passed else 'FAIL'}: {c.name}"
                + (f" ({c.detail})" if c.detail else ""))
    for i, note in enumerate(v.notes):
        rep.add(f"{prefix}note[{i}]", note)


def cmd_general_type(args) -> tuple[Report, int]:
    if bool(args.case) == bool(args.file):
        raise InputError("give exactly one of --case NAME or --file F")
    if args.case:
        try:
            case = catalog_mod.case_by_name(args.case)
        except KeyError as exc:
            names = ", ".join(c.name for c in catalog_mod.catalog())
            raise InputError(f"{exc.args[0]}; known cases: {names}") from None
    else:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(f"{args.file}: {exc.strerror}") from None
        try:
            case = case_from_json(latticefile.loads_json(text))
        except (LatticeFileError, ValueError) as exc:
            raise InputError(f"{args.file}: {exc}") from None
    case = dataclasses.replace(case, star_assumed=args.assume_star)
    v = general_type.run_case(case)
    rep = Report("general-type")
    rep.add("case", v.case)
    rep.add("star_assumed", args.assume_star)
    _verdict_report(rep, v)
    rep.summary = v.status.value
    return rep, EXIT_FAILED if v.failed_conditions else EXIT_OK


def cmd_catalog(args) -> tuple[Report, int]:
    cases = catalog_mod.catalog()
    rep = Report("catalog")
    if not args.verify:
        for c in cases:
            rep.add(c.name, f"d={c.field_d} rank={c.sub_rank} complement={c.expected_complement} n={c.n}")
        rep.summary = f"{len(cases)} cases"
        return rep, EXIT_OK
    good = 0
    for c in cases:
        v = general_type.run_case(c)
        ok = v.status is general_type.Status.GENERAL_TYPE_CONDITIONAL_ON_STAR
        good += ok
        line = f"{v.status.value} n={v.values.get('n')} roots={v.values.get('root_count')} " \
               f"weight={v.values.get('weight')} root_weight={v.values.get('root_weight')}"
        if v.failed_conditions:
            line += " failed=" + "|".join(v.failed_conditions)
        rep.add(c.name, line)
        if args.notes:
            for i, note in enumerate(v.notes):
                rep.add(f"{c.name}.note[{i}]", note)
    rep.summary = f"{good}/{len(cases)} cases GENERAL_TYPE_CONDITIONAL_ON_STAR"
    return rep, EXIT_OK if good == len(cases) else EXIT_FAILED


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hermlat", description="Exact Hermitian and quadratic lattice checks.")
    ap.add_argument("--format", choices=("text", "kv"), default="text", help="report style")
    # also accepted after the subcommand name
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--format", choices=("text", "kv"), default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[fmt_parent], **kw)

    sub.add_parser = add_parser

    p = sub.add_parser("analyze", help="integrality, evenness, signature, det, discriminant group")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("trace-form", help="emit the trace lattice of a hermitian file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_trace_form)

    p = sub.add_parser("roots", help="count vectors of a given norm in a definite lattice")
    p.add_argument("file")
    p.add_argument("--norm", type=int, help="default: 2 or -2 matching the sign")
    p.add_argument("--allow-large-rank", action="store_true")
    p.add_argument("--list", action="store_true", help="print one vector per +/- pair")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("identify", help="ADE type of the root system")
    p.add_argument("file")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("complement", help="orthogonal complement of a sublattice")
    p.add_argument("ambient")
    p.add_argument("sub_basis", help='JSON {"basis": [[...], ...]} in ambient coordinates')
    p.add_argument("-o", "--output", help="write the complement as a lattice file")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("isometric", help="test two definite lattices for isometry")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_isometric)

    p = sub.add_parser("age", help="age of a finite-order diagonal map")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--exponents", required=True, help="comma-separated, e.g. 1,1,2")
    p.set_defaults(func=cmd_age)

    p = sub.add_parser("rst-scan", help="minimum decomposition age per dimension")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_rst_scan)

    p = sub.add_parser("seisu", help="certify the totative-sum bound up to R")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_seisu)

    p = sub.add_parser("general-type", help="run the hypothesis pipeline on one embedding")
    p.add_argument("--case")
    p.add_argument("--file")
    p.add_argument("--assume-star", action="store_true",
                   help="treat the unverified cusp-vanishing condition as given")
    p.set_defaults(func=cmd_general_type)

    p = sub.add_parser("catalog", help="list or verify the built-in embedding cases")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--notes", action="store_true", help="also print per-case notes")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        out, code = args.func(args)
    except (InputError, LatticeFileError) as exc:
        print(f"hermlat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"hermlat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out.render(args.format) if isinstance(out, Report) else out)
    return code


if __name__ == "__main__":
    sys.exit(main())
