"""Command-line interface: ``warpdeg <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from importlib import resources
from pathlib import Path

from . import census
from .codec import canonical, emit_gauss, emit_pd, parse_pd_file
from .errors import WarpdegError
from .region_opt import (
    emit_dimacs,
    independent_sets_for_base,
    ir,
    ir_base,
    region_choice_matrix,
    verify_bounds,
)
from .shadow import Shadow, trace_regions
from .warping import warping_degree_shadow

log = logging.getLogger("warpdeg")

CSV_HEADER = ["name", "crossings", "reduced", "d", "ir", "lower_ok", "upper_ok"]
BUNDLED_CORPUS = "rolfsen_alternating.pd"


class InputError(Exception):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    shadow: Shadow
    provenance: str


def load_corpus(path) -> list[CorpusEntry]:
    """Parse a PD corpus file; raises InputError naming the offending line."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return _entries_from_text(text, str(path))


def load_bundled_corpus() -> list[CorpusEntry]:
    text = resources.files("warpdeg.data").joinpath(BUNDLED_CORPUS).read_text(encoding="utf-8")
    return _entries_from_text(text, f"bundled:{BUNDLED_CORPUS}")


def _entries_from_text(text, source):
    entries = []
    names = set()
    codes = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            (name, shadow), = parse_pd_file(body)
        except WarpdegError as exc:
            raise InputError(f"{source}:{lineno}: {exc}") from None
        name = name or f"entry{lineno}"
        if name in names:
            raise InputError(f"{source}:{lineno}: duplicate name {name!r}")
        if not shadow.is_connected:
            raise InputError(f"{source}:{lineno}: shadow {name!r} is not connected")
        names.add(name)
        key = canonical(shadow)
        if key in codes:
            log.warning("%s:%d: %s is isomorphic to %s", source, lineno, name, codes[key])
        else:
            codes[key] = name
        entries.append(CorpusEntry(name, shadow, f"{source}:{lineno}"))
    return entries


def _gather(args) -> list[CorpusEntry]:
    files = []
    if getattr(args, "path", None):
        files.append(Path(args.path))
    if getattr(args, "file", None):
        files.append(Path(args.file))
    if getattr(args, "dir", None):
        d = Path(args.dir)
        if not d.is_dir():
            raise InputError(f"{d}: not a directory")
        files.extend(sorted(d.glob("*.pd")))
    if not files:
        return load_bundled_corpus()
    out = []
    for f in files:
        out.extend(load_corpus(f))
    return out


# per-entry analysis (module level so worker processes can pickle it)

def analyse(entry: CorpusEntry) -> dict:
    s = entry.shadow
    s.require_knot()
    w = warping_degree_shadow(s)
    r = ir(s)
    b = verify_bounds(s, w, r)
    return {
        "name": entry.name,
        "crossings": s.crossing_count,
        "reduced": b.reduced,
        "warp": {"d_p": w.d_p, "witness": list(w.witness),
                 "per_base": [[list(v) for v in row] for row in w.per_base]},
        "ir": {"ir": r.ir, "base_crossing": r.base_crossing,
               "region_set": list(r.region_set), "per_crossing": list(r.per_crossing)},
        "bounds": {**asdict(b), "theorem1": b.theorem1_verdict, "ok": b.ok},
    }


def _analyse_all(entries, jobs):
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(analyse, entries))
    return [analyse(e) for e in entries]


def _csv_row(rep):
    b = rep["bounds"]
    return [rep["name"], rep["crossings"], int(rep["reduced"]), rep["warp"]["d_p"],
            rep["ir"]["ir"], int(b["lower_ok"]), int(b["upper_ok"])]


def _render_rows(reports, fmt, header_note=None):
    if fmt == "json":
        doc = {"entries": len(reports), "rows": reports}
        if header_note:
            doc["source"] = header_note
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    if header_note:
        buf.write(f"# {header_note}; entries: {len(reports)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in reports:
        w.writerow(_csv_row(rep))
    return buf.getvalue()


def _emit(text, args):
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _sources(args):
    if getattr(args, "path", None) or getattr(args, "file", None) or getattr(args, "dir", None):
        return ", ".join(str(p) for p in (args.path, args.file, args.dir) if p)
    return f"bundled {BUNDLED_CORPUS}"


# commands

def cmd_parse(args):
    entries = _gather(args)
    rows = [{
        "name": e.name,
        "crossings": e.shadow.crossing_count,
        "components": e.shadow.component_count,
        "regions": e.shadow.face_count,
        "reduced": e.shadow.is_reduced(),
        "gauss": emit_gauss(e.shadow),
        "pd": emit_pd(e.shadow),
        "canonical": canonical(e.shadow),
    } for e in entries]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2, sort_keys=True) + "\n", args)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["name"], lineterminator="\n")
        w.writeheader()
        w.writerows({**r, "reduced": int(r["reduced"])} for r in rows)
        _emit(buf.getvalue(), args)
    return 0


def cmd_regions(args):
    out = []
    for e in _gather(args):
        s = e.shadow
        m = region_choice_matrix(s)
        out.append(f"# {e.name}: {s.crossing_count} crossings, {s.face_count} regions")
        for r in trace_regions(s):
            xs = " ".join(map(str, sorted(r.incident_crossings)))
            out.append(f"region {r.id}: corners {r.size}, crossings {xs}")
        out.append("matrix (rows = crossings, columns = regions):")
        out.extend("".join(map(str, row)) for row in m.rows)
    _emit("\n".join(out) + "\n", args)
    return 0


def cmd_warp(args):
    entries = _gather(args)
    reps = []
    for e in entries:
        e.shadow.require_knot()
        w = warping_degree_shadow(e.shadow)
        reps.append({"name": e.name, "crossings": e.shadow.crossing_count,
                     "d_p": w.d_p, "witness": list(w.witness),
                     "per_base": [[list(v) for v in row] for row in w.per_base]})
    if args.format == "json":
        _emit(json.dumps(reps, indent=2, sort_keys=True) + "\n", args)
    else:
        lines = ["name,crossings,d,assignment,direction,base_edge"]
        lines += [f"{r['name']},{r['crossings']},{r['d_p']},{','.join(map(str, r['witness']))}" for r in reps]
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_ir(args):
    entries = _gather(args)
    out = []
    json_rows = []
    for e in entries:
        s = e.shadow
        if args.emit_dimacs is not None:
            if args.crossing is None:
                raise InputError("--emit-dimacs needs --crossing")
            out.append(emit_dimacs(s, _crossing(args, s), args.emit_dimacs).rstrip("\n"))
            continue
        if args.crossing is not None:
            x = _crossing(args, s)
            value, witness = ir_base(s, x)
            row = {"name": e.name, "base_crossing": x, "ir_base": value, "region_set": list(witness)}
            if args.all_sets:
                inc = [r.incident_crossings for r in trace_regions(s)]
                sets = independent_sets_for_base(region_choice_matrix(s), x)
                row["all_sets"] = [list(v.regions) for v in sets]
                out.append(f"# {e.name}: IR at crossing {x} = {value}; {len(sets)} independent sets")
                for v in sets:
                    desc = "; ".join(
                        f"R{j}{{{','.join(map(str, sorted(inc[j])))}}}" for j in v.regions)
                    out.append(desc)
            else:
                out.append(f"{e.name},{x},{value},{' '.join(map(str, witness))}")
            json_rows.append(row)
        else:
            s.require_knot()
            r = ir(s)
            json_rows.append({"name": e.name, **asdict(r)})
            out.append(f"{e.name},{r.ir},{r.base_crossing},{' '.join(map(str, r.region_set))},"
                       f"{' '.join(map(str, r.per_crossing))}")
    if args.format == "json" and args.emit_dimacs is None:
        _emit(json.dumps(json_rows, indent=2, sort_keys=True) + "\n", args)
    else:
        if args.crossing is None and args.emit_dimacs is None:
            out.insert(0, "name,ir,base_crossing,region_set,per_crossing")
        _emit("\n".join(out) + "\n", args)
    return 0


def _crossing(args, s):
    x = args.crossing
    if not 0 <= x < s.crossing_count:
        raise InputError(f"--crossing {x} out of range 0..{s.crossing_count - 1}")
    return x


def cmd_verify(args):
    entries = _gather(args)
    reports = _analyse_all(entries, args.jobs)
    _emit(_render_rows(reports, args.format), args)
    failed = [r["name"] for r in reports if not r["bounds"]["ok"]]
    for name in failed:
        print(f"verification failed: {name}", file=sys.stderr)
    return 1 if failed else 0


def cmd_corpus(args):
    entries = _gather(args)
    reports = _analyse_all(entries, args.jobs)
    _emit(_render_rows(reports, args.format, header_note=f"corpus: {_sources(args)}"), args)
    return 1 if any(not r["bounds"]["ok"] for r in reports) else 0


def _census_config(args) -> census.CensusConfig:
    base = census.CensusConfig(jobs=args.jobs)
    if args.links:
        return replace(base, link_limit=args.limit or base.link_limit)
    return replace(base, knot_limit=args.limit or base.knot_limit)


def cmd_enumerate(args):
    cfg = _census_config(args)
    limit = cfg.link_limit if args.links else cfg.knot_limit
    lines = []
    if args.dir:
        Path(args.dir).mkdir(parents=True, exist_ok=True)
    if args.table:
        rows = census.dmin_table(args.c_from, args.c_to, limit=limit, jobs=cfg.jobs)
        if args.format == "json":
            lines.append(json.dumps([asdict(r) for r in rows], indent=2))
        else:
            lines.append("c,count_reduced,d_min,ir_min,ir_max")
            lines += [f"{r.c},{r.count_reduced},{r.d_min},{r.ir_min},{r.ir_max}" for r in rows]
    for c in range(args.c_from, args.c_to + 1):
        if args.links:
            shadows = census.enumerate_link_shadows(c, limit=limit)
            prefix, fname = "L", f"links_c{c}.pd"
        else:
            shadows = census.enumerate_knot_shadows(c, reduced_only=not args.all, limit=limit,
                                                    jobs=cfg.jobs)
            prefix, fname = "K", f"knots_c{c}.pd"
        named = census.census_names(prefix, c, shadows)
        if args.dir:
            text = "".join(emit_pd(s, n) + "\n" for n, s in named)
            (Path(args.dir) / fname).write_text(text, encoding="utf-8")
        if not args.table:
            lines.append(f"{c},{len(shadows)}")
    if not args.table:
        lines.insert(0, "c,count")
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_theorem2(args):
    cfg = census.CensusConfig(knot_limit=args.limit or census.DEFAULT_KNOT_LIMIT,
                              link_limit=args.link_limit, jobs=args.jobs)
    rep = census.theorem2_check(args.n, cfg.knot_limit, cfg.link_limit, cfg.jobs)
    doc = {**asdict(rep), "status": rep.status, "informative": rep.informative}
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args)
    return 1 if rep.status == "FAIL" else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="warpdeg", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def inputs(sp, positional=True):
        if positional:
            sp.add_argument("path", nargs="?", help="PD corpus file")
        sp.add_argument("--file", help="PD corpus file")
        sp.add_argument("--dir", help="directory of *.pd files")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("parse", help="validate PD input and print codes")
    inputs(sp)
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("regions", help="regions and region choice matrix")
    inputs(sp)
    sp.set_defaults(func=cmd_regions)

    sp = sub.add_parser("warp", help="warping degree of each knot shadow")
    inputs(sp)
    sp.set_defaults(func=cmd_warp)

    sp = sub.add_parser("ir", help="maximal independent region number")
    inputs(sp)
    sp.add_argument("--crossing", type=int, help="base crossing (0-based)")
    sp.add_argument("--all-sets", action="store_true", help="list every independent set for the base")
    sp.add_argument("--emit-dimacs", type=int, metavar="K", help="print CNF for size >= K")
    sp.set_defaults(func=cmd_ir)

    sp = sub.add_parser("verify", help="check the warping degree bounds; exit 1 on a violation")
    inputs(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("corpus", help="full report over a corpus (bundled Rolfsen corpus by default)")
    inputs(sp)
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("enumerate", help="census of shadows and the d_min table")
    sp.add_argument("--from", dest="c_from", type=int, default=3)
    sp.add_argument("--to", dest="c_to", type=int, default=7)
    sp.add_argument("--table", action="store_true", help="print d_min per crossing number")
    sp.add_argument("--links", action="store_true", help="connected link shadows instead of knots")
    sp.add_argument("--all", action="store_true", help="include non-reduced knot shadows")
    sp.add_argument("--limit", type=int, help="largest crossing number allowed")
    sp.add_argument("--dir", help="write knots_c<k>.pd / links_c<k>.pd cache files here")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("theorem2", help="link-census lower bound m-1 checked on knot shadows")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--limit", type=int, help="knot census limit")
    sp.add_argument("--link-limit", type=int, default=census.DEFAULT_LINK_LIMIT)
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_theorem2)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, WarpdegError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # output piped into a pager or head that closed early
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
