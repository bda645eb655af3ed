"""Command-line front end.

Every command prints one canonical JSON report on stdout.  Exit status is 0
for success or a true answer, 1 for a computed false or a failed check, and
2 for unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import warnings
from pathlib import Path

from . import __version__, corpus, groups, io
from .extensions import (
    NonCommutativeWarning,
    adjoint_stability,
    check_exact_sequence,
    cotensor_injectivity,
    extension_rep,
    glue_hypothesis,
    glueing_rep,
    quotient_by_subalgebra,
)
from .hopf import (
    Functional,
    HaarError,
    HopfError,
    dual_group_algebra,
    group_algebra,
    haar_functional,
    is_hopf_ideal,
    quotient_hopf,
    sweedler,
    verify_hopf,
)
from .image import hopf_image_fixpoint, hopf_image_words
from .reps import RepresentationError, rep_kernel, verify_rep
from .scalars import QQ, FieldError, cyclotomic_field
from .star import (
    RegularAntipodeWitness,
    StarError,
    augment_regular,
    conditional_expectation,
    inner_unitary,
    is_star_rep,
    largest_hopf_star_ideal,
    unitary_induction,
    verify_star,
)

INPUT_ERRORS = (io.SchemaError, FieldError, HopfError, RepresentationError, groups.GroupTableError, ValueError)


class Context:
    """Tracks input files so the report can carry their content hash."""

    def __init__(self):
        self.inputs: list[Path] = []

    def path(self, p) -> Path:
        p = Path(p)
        self.inputs.append(p)
        return p

    def digest(self) -> str:
        h = hashlib.sha256()
        for p in self.inputs:
            try:
                h.update(p.read_bytes())
            except OSError:
                pass
        return h.hexdigest()

    def algebra(self, p):
        return io.load_algebra(self.path(p))

    def rep(self, H, p):
        return io.load_rep(H, self.path(p))

    def subspace(self, H, p):
        return io.load_subspace(H.field, self.path(p), H.dim)

    def embedding(self, H, p):
        return io.load_embedding(self.path(p), H)

    def value(self, raw):
        """A JSON value given inline or as a path to a file."""
        p = Path(raw)
        if p.is_file():
            return io.read_json(self.path(p))
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise io.SchemaError(raw, "neither a file nor inline JSON") from exc


def _field(args):
    if args.cyclotomic:
        return cyclotomic_field(args.cyclotomic)[0]
    return QQ


# -- commands: each returns (exit code, result dict) ----------------------------------


def cmd_check(ctx, args):
    H = ctx.algebra(args.algebra)
    report = verify_hopf(H)
    out = {"algebra": report.to_json(), "failed": report.failed()}
    ok = report.ok
    if H.star is not None:
        sr = verify_star(H)
        out["star"] = sr.to_json()
        ok = ok and sr.ok
    return (0 if ok else 1), out


def cmd_gen(ctx, args):
    F = _field(args)
    if args.kind == "sweedler":
        H = sweedler(F)
    elif args.kind == "corpus":
        return _gen_corpus(args)
    else:
        if not args.table:
            raise io.SchemaError("--table", "required for this generator")
        table = io.load_table(ctx.path(args.table))
        if args.kind == "group-algebra":
            H = group_algebra(table, F)
            if args.star:
                H = H.with_star(H.antipode)
        else:
            H = dual_group_algebra(table, F)
    data = H.to_json()
    if args.out:
        io.write_json(args.out, data)
        return 0, {"written": str(args.out), "dim": H.dim}
    return 0, data


def _gen_corpus(args):
    if not args.out:
        raise io.SchemaError("--out", "a directory is required for the corpus")
    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    files = {}
    algebras = {}
    for entry in corpus.corpus():
        H = entry.algebra
        key = H.name or "sweedler"
        slug = key.replace("[", "_").replace("]", "").replace("^", "_dual_")
        if key not in algebras:
            algebras[key] = slug
            io.write_json(root / f"{slug}.json", H.to_json())
        rep_name = entry.name.replace("/", "__").replace("+", "_plus_")
        rep_path = root / f"{rep_name}.rep.json"
        io.write_json(rep_path, {**entry.rep.to_json(), "algebra": f"{slug}.json"})
        files[rep_path.name] = f"{slug}.json"
    io.write_json(root / "index.json", files)
    return 0, {"written": str(root), "algebras": len(algebras), "representations": len(files)}


def cmd_rep_check(ctx, args):
    H = ctx.algebra(args.algebra)
    report = verify_rep(ctx.rep(H, args.rep))
    return (0 if report.ok else 1), report.to_json()


def _valid_rep(ctx, H, path):
    pi = ctx.rep(H, path)
    report = verify_rep(pi)
    if not report.ok:
        raise RepresentationError(f"representation axioms fail: {report.to_json()}")
    return pi


def cmd_image(ctx, args):
    H = ctx.algebra(args.algebra)
    pi = _valid_rep(ctx, H, args.rep)
    if args.alg == "words":
        res = hopf_image_words(pi, args.max_len)
    else:
        res = hopf_image_fixpoint(pi)
    return 0, res.to_json()


def cmd_inner_faithful(ctx, args):
    H = ctx.algebra(args.algebra)
    res = hopf_image_fixpoint(_valid_rep(ctx, H, args.rep))
    return (0 if res.inner_faithful else 1), {"inner_faithful": res.inner_faithful, "ideal_dim": res.ideal.dim}


def cmd_quotient(ctx, args):
    H = ctx.algebra(args.algebra)
    J = ctx.subspace(H, args.ideal)
    report = is_hopf_ideal(H, J)
    if not report.ok:
        return 1, {"hopf_ideal": report.to_json()}
    Q, P = quotient_hopf(H, J)
    return 0, {"hopf_ideal": report.to_json(), "quotient": Q.to_json(), "projection": P.to_json()}


def cmd_extend(ctx, args):
    H = ctx.algebra(args.algebra)
    emb = ctx.embedding(H, args.subalgebra)
    rho = _valid_rep(ctx, emb.small, args.rep)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NonCommutativeWarning)
        theta = extension_rep(emb, rho)
    res = hopf_image_fixpoint(theta)
    out = {
        "theta": theta.to_json(),
        "inner_faithful": res.inner_faithful,
        "ideal_dim": res.ideal.dim,
        "subalgebra_commutative": emb.small.is_commutative(),
        "warnings": [str(w.message) for w in caught],
    }
    return (0 if res.inner_faithful else 1), out


def _two_ideals(ctx, H, args):
    return ctx.subspace(H, args.ideal1), ctx.subspace(H, args.ideal2)


def cmd_glue(ctx, args):
    H = ctx.algebra(args.algebra)
    I1, I2 = _two_ideals(ctx, H, args)
    Q1, _ = quotient_hopf(H, I1)
    Q2, _ = quotient_hopf(H, I2)
    rho1 = _valid_rep(ctx, Q1, args.rep1)
    rho2 = _valid_rep(ctx, Q2, args.rep2)
    rep = glueing_rep(H, I1, I2, rho1, rho2)
    res = hopf_image_fixpoint(rep)
    out = {
        "hypothesis": glue_hypothesis(H, I1, I2),
        "inner_faithful": res.inner_faithful,
        "ideal_dim": res.ideal.dim,
        "representation": rep.to_json(),
    }
    return (0 if res.inner_faithful else 1), out


def cmd_cotensor(ctx, args):
    H = ctx.algebra(args.algebra)
    I1, I2 = _two_ideals(ctx, H, args)
    injective = cotensor_injectivity(H, I1, I2)
    return (0 if injective else 1), {"injective": injective}


def cmd_exact_check(ctx, args):
    H = ctx.algebra(args.algebra)
    emb = ctx.embedding(H, args.subalgebra)
    if args.quotient:
        Hbar = ctx.algebra(args.quotient)
        if not args.projection:
            raise io.SchemaError("--projection", "required with --quotient")
        raw = io.read_json(ctx.path(args.projection))
        p = io._matrix(H.field, raw, Hbar.dim, H.dim, "projection")
    else:
        if not adjoint_stability(emb):
            return 1, {"normal": False}
        Hbar, p = quotient_by_subalgebra(emb)
    report = check_exact_sequence(emb, Hbar, p)
    return (0 if report.ok else 1), report.to_json()


def cmd_star_check(ctx, args):
    H = ctx.algebra(args.algebra)
    if H.star is None:
        raise io.SchemaError("star", "algebra file has no star matrix")
    report = verify_star(H)
    return (0 if report.ok else 1), report.to_json()


def _form(ctx, F, raw, n):
    return io.form_from_json(F, ctx.value(raw), n) if raw else None


def cmd_inner_unitary(ctx, args):
    H = ctx.algebra(args.algebra)
    if H.star is None:
        raise io.SchemaError("star", "algebra file has no star matrix")
    pi = _valid_rep(ctx, H, args.rep)
    G = _form(ctx, H.field, args.form, pi.n)
    if not is_star_rep(pi, G):
        raise StarError("not a *-representation")
    J = largest_hopf_star_ideal(H, rep_kernel(pi))
    iu = inner_unitary(pi, G)
    return (0 if iu else 1), {"inner_unitary": iu, "ideal_dim": J.dim, "ideal": J.to_json()}


def cmd_haar(ctx, args):
    H = ctx.algebra(args.algebra)
    try:
        phi = haar_functional(H)
    except HaarError as exc:
        return 1, {"haar": None, "reason": str(exc)}
    return 0, {"haar": phi.to_json()}


def cmd_cond_exp(ctx, args):
    H = ctx.algebra(args.algebra)
    emb = ctx.embedding(H, args.subalgebra)
    try:
        E = conditional_expectation(emb)
    except HaarError as exc:
        return 1, {"expectation": None, "reason": str(exc)}
    return 0, {"expectation": E.to_json()}


def cmd_unitary_induce(ctx, args):
    H = ctx.algebra(args.algebra)
    emb = ctx.embedding(H, args.subalgebra)
    rho = _valid_rep(ctx, emb.small, args.rep)
    G = _form(ctx, H.field, args.form, rho.n)
    res = unitary_induction(emb, rho, G)
    out = {
        **res.to_json(),
        "representation": res.rep.to_json(),
        "form": res.form.gram.to_json(),
    }
    ok = res.hermitian and res.isometric and res.induced_star_rep and res.positivity != "indefinite"
    return (0 if ok else 1), out


def cmd_augment(ctx, args):
    H = ctx.algebra(args.algebra)
    pi = _valid_rep(ctx, H, args.rep)
    a = io.vector_from_json(H.field, ctx.value(args.grouplike), H.dim, "grouplike")
    phi = Functional(io.vector_from_json(H.field, ctx.value(args.character), H.dim, "character"))
    w = RegularAntipodeWitness(a, phi, args.m)
    try:
        rep = augment_regular(pi, w)
    except StarError as exc:
        if "identity" in str(exc):
            return 1, {"regular_antipode": False}
        raise
    res = hopf_image_fixpoint(rep)
    return (0 if res.inner_faithful else 1), {
        "regular_antipode": True,
        "dim": rep.n,
        "inner_faithful": res.inner_faithful,
        "representation": rep.to_json(),
    }


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfimage", description="Exact Hopf image computations on finite-dimensional Hopf algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, help=None):
        sp = sub.add_parser(name, help=help)
        for pos in positional:
            sp.add_argument(pos)
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "algebra", help="verify the Hopf axioms (and the star axioms if present)")
    g = add("gen", cmd_gen, help="generate an algebra file")
    g.add_argument("kind", choices=["group-algebra", "dual-group-algebra", "sweedler", "corpus"])
    g.add_argument("--table")
    g.add_argument("--cyclotomic", type=int, default=0, help="work over Q(zeta_n)")
    g.add_argument("--star", action="store_true", help="attach gamma* = gamma^-1")
    g.add_argument("--out")
    add("rep-check", cmd_rep_check, "algebra", "rep")
    im = add("image", cmd_image, "algebra", "rep", help="largest Hopf ideal in the kernel")
    im.add_argument("--alg", choices=["fixpoint", "words"], default="fixpoint")
    im.add_argument("--max-len", type=int, default=None)
    add("inner-faithful", cmd_inner_faithful, "algebra", "rep")
    q = add("quotient", cmd_quotient, "algebra")
    q.add_argument("--ideal", required=True)
    e = add("extend", cmd_extend, "algebra")
    e.add_argument("--subalgebra", required=True)
    e.add_argument("--rep", required=True)
    gl = add("glue", cmd_glue, "algebra")
    for flag in ("--ideal1", "--ideal2", "--rep1", "--rep2"):
        gl.add_argument(flag, required=True)
    ct = add("cotensor", cmd_cotensor, "algebra")
    ct.add_argument("--ideal1", required=True)
    ct.add_argument("--ideal2", required=True)
    ex = add("exact-check", cmd_exact_check, "algebra")
    ex.add_argument("--subalgebra", required=True)
    ex.add_argument("--quotient")
    ex.add_argument("--projection")
    add("star-check", cmd_star_check, "algebra")
    iu = add("inner-unitary", cmd_inner_unitary, "algebra", "rep")
    iu.add_argument("--form")
    add("haar", cmd_haar, "algebra")
    ce = add("cond-exp", cmd_cond_exp, "algebra")
    ce.add_argument("--subalgebra", required=True)
    ui = add("unitary-induce", cmd_unitary_induce, "algebra")
    ui.add_argument("--subalgebra", required=True)
    ui.add_argument("--rep", required=True)
    ui.add_argument("--form")
    au = add("augment", cmd_augment, "algebra", "rep")
    au.add_argument("--grouplike", required=True)
    au.add_argument("--character", required=True)
    au.add_argument("--m", type=int, default=1)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    ctx = Context()
    try:
        code, result = args.func(ctx, args)
    except INPUT_ERRORS as exc:
        code, result = 2, {"error": type(exc).__name__, "message": str(exc)}
        print(f"error: {exc}", file=sys.stderr)
    report = {
        "command": args.command,
        "exit_code": code,
        "input_sha256": ctx.digest(),
        "result": result,
        "tool_version": __version__,
    }
    stdout.write(io.dumps(report))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
