"""Command line interface: every library operation behind stable JSON I/O.

Subcommands read structured input from stdin (or a file) and print JSON to
stdout, so pipelines like `build | complement | info` need no temp files.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import clifford as cl
from . import embeddings as emb
from . import enumeration as enum_mod
from . import lattices as lat
from . import roots
from . import serialize as ser
from .linalg import IntMatrix


def _read_json(args, attr="file"):
    path = getattr(args, attr, None)
    text = open(path).read() if path else sys.stdin.read()
    return json.loads(text)


def _emit(args, payload):
    print(ser.dumps(payload, raw_ints=args.raw_ints))


def _parse_vector(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")


# ---------------------------------------------------------------------------
# lattice commands

_BUILDERS = {
    "k3": lambda a: lat.k3_lattice(),
    "l_d": lambda a: lat.l_d(_require(a.d, "--d")),
    "big-l": lambda a: lat.big_l(),
    "e8": lambda a: lat.e8(),
    "u": lambda a: lat.hyperbolic_u(),
    "rank-one": lambda a: lat.rank_one(_require(a.n, "--n")),
}


def _require(value, flag):
    if value is None:
        raise ValueError(f"this builder needs {flag}")
    return value


def cmd_lattice_build(args):
    if args.file:
        built = ser.lattice_from_obj(_read_json(args))
    else:
        if args.name is None:
            raise ValueError("give a lattice name or --file")
        built = _BUILDERS[args.name](args)
    _emit(args, ser.lattice_to_obj(built))


def cmd_lattice_info(args):
    lattice = ser.lattice_from_obj(_read_json(args))
    sig = lattice.signature()
    info = {
        "rank": lattice.rank,
        "signature": list(sig),
        "disc": lattice.det(),
        "disc_group": list(lat.discriminant_group(lattice).invariant_factors)
        if lattice.is_nondegenerate() else None,
    }
    if args.table:
        for key in ("rank", "signature", "disc", "disc_group"):
            print(f"{key:12} {info[key]}")
        return
    _emit(args, info)


def cmd_four_squares(args):
    witness = emb.four_squares(args.m)
    _emit(args, {"m": witness.m, "parts": list(witness.parts)})


def cmd_ld_in_l(args):
    _emit(args, ser.embedding_to_obj(emb.embed_ld_in_l(args.d)))


def cmd_vd(args):
    data = emb.v_d_in_k3(args.d, positive_norm=args.positive_norm)
    _emit(args, {
        "vector": list(data.vector),
        "complement": ser.embedding_to_obj(data.complement),
        "iso_target": ser.lattice_to_obj(data.target),
        "iso_matrix": data.iso_matrix.tolists(),
    })


def cmd_complement(args):
    sub = ser.embedding_from_obj(_read_json(args))
    _emit(args, ser.embedding_to_obj(lat.orthogonal_complement(sub)))


def cmd_saturate(args):
    sub = ser.embedding_from_obj(_read_json(args))
    _emit(args, ser.embedding_to_obj(lat.saturate(sub)))


def cmd_roots(args):
    lattice = ser.lattice_from_obj(_read_json(args))
    report = roots.short_vectors(lattice, args.norm)
    _emit(args, {
        "norm": report.norm,
        "count": report.count(),
        "complete": report.complete,
        "vectors": [list(v) for v in report.vectors],
    })


def cmd_walls(args):
    lattice = ser.lattice_from_obj(_read_json(args))
    walls = roots.minus_two_walls_through(lattice, _parse_vector(args.v))
    _emit(args, {"v": list(_parse_vector(args.v)), "walls": [list(w) for w in walls]})


def cmd_mindeg(args):
    lattice = ser.lattice_from_obj(_read_json(args))
    res = roots.min_polarization_degree(lattice, args.norm_limit, args.box, jobs=args.jobs)
    _emit(args, {
        "upper_bound": res.upper_bound,
        "certificate": list(res.certificate) if res.certificate else None,
        "norm_limit": res.searched_norm_limit,
        "box": res.searched_box,
        "exhaustive": res.exhaustive,
    })


def cmd_verify_cert(args):
    lattice = ser.lattice_from_obj(_read_json(args))
    ok = roots.verify_certificate(lattice, _parse_vector(args.v), args.degree)
    _emit(args, {"valid": ok})
    if not ok:
        sys.exit(1)


def cmd_disc_kernel(args):
    iso = ser.isometry_from_obj(_read_json(args, "isometry_file") if args.isometry_file
                                else _read_json(args))
    _emit(args, {"in_discriminant_kernel": lat.in_discriminant_kernel(iso)})


def cmd_enumerate(args):
    lst = enum_mod.enumerate_lattices(args.rank, args.max_disc, even_only=args.even)
    if args.csv:
        from collections import Counter

        counts = Counter(lst.discs())
        print("disc,count")
        for disc in sorted(counts):
            print(f"{disc},{counts[disc]}")
        return
    _emit(args, {
        "rank": lst.rank,
        "max_disc": lst.max_disc,
        "count": lst.count(),
        "forms": [f.tolists() for f in lst.forms],
    })


def cmd_check_disc_complement(args):
    payload = _read_json(args)
    left = ser.embedding_from_obj(payload["left"])
    right = ser.embedding_from_obj(payload["right"])
    report = lat.check_disc_complement(left, right)
    _emit(args, {"disc": report.disc_left, "disc_complement": report.disc_right,
                 "index": report.index})


# ---------------------------------------------------------------------------
# clifford commands

def cmd_clifford(args):
    payload = _read_json(args)
    if args.op == "mul":
        x = ser.clifford_from_obj(payload["x"])
        y = ser.clifford_from_obj(payload["y"], x.host)
        _emit(args, ser.clifford_to_obj(x * y))
    elif args.op == "reversal":
        x = ser.clifford_from_obj(payload)
        _emit(args, ser.clifford_to_obj(cl.reversal(x)))
    elif args.op == "phi-a":
        x = ser.clifford_from_obj(payload["x"])
        y = ser.clifford_from_obj(payload["y"], x.host)
        a = ser.clifford_from_obj(payload["a"], x.host)
        _emit(args, {"value": cl.phi_a(x, y, a)})
    elif args.op == "find-a":
        host = ser.lattice_from_obj(payload)
        pol = cl.find_polarization_element(host)
        _emit(args, {"a": ser.clifford_to_obj(pol.element),
                     "gram_det_nonzero": True})
    elif args.op == "gspin":
        host = ser.lattice_from_obj(payload["lattice"])
        pair = cl.gspin_generator(payload["v"], payload["w"], host)
        report = cl.conjugation_preserves_lattice(pair, host)
        _emit(args, {
            "g": ser.clifford_to_obj(pair.g),
            "inverse_numerator": ser.clifford_to_obj(pair.inverse_numerator),
            "denominator": pair.denominator,
            "preserves_lattice": report.preserves,
            "images": [list(v) for v in report.images] if report.images else None,
        })
    elif args.op == "project":
        host = ser.lattice_from_obj(payload["lattice"])
        entries = [[int(x) for x in row] for row in payload["endo"]]
        f = cl.EndoMatrix(len(entries), IntMatrix(entries))
        _emit(args, {"vector": list(cl.project_endo_to_l(f, host))})
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown clifford op {args.op}")


# ---------------------------------------------------------------------------
# wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3lat", description=__doc__)
    parser.add_argument("--raw-ints", action="store_true",
                        help="emit large integers as JSON numbers, not strings")
    sub = parser.add_subparsers(dest="command", required=True)

    p_lat = sub.add_parser("lattice", help="build lattices and report invariants")
    lat_sub = p_lat.add_subparsers(dest="subcommand", required=True)
    p_build = lat_sub.add_parser("build")
    p_build.add_argument("name", nargs="?", choices=sorted(_BUILDERS))
    p_build.add_argument("--d", type=int)
    p_build.add_argument("--n", type=int)
    p_build.add_argument("--file")
    p_build.set_defaults(func=cmd_lattice_build)
    p_info = lat_sub.add_parser("info")
    p_info.add_argument("--file")
    p_info.add_argument("--table", action="store_true")
    p_info.set_defaults(func=cmd_lattice_info)

    p_embed = sub.add_parser("embed", help="the explicit embedding constructions")
    embed_sub = p_embed.add_subparsers(dest="subcommand", required=True)
    p_fs = embed_sub.add_parser("four-squares")
    p_fs.add_argument("--m", type=int, required=True)
    p_fs.set_defaults(func=cmd_four_squares)
    p_ld = embed_sub.add_parser("ld-in-l")
    p_ld.add_argument("--d", type=int, required=True)
    p_ld.set_defaults(func=cmd_ld_in_l)
    p_vd = embed_sub.add_parser("vd")
    p_vd.add_argument("--d", type=int, required=True)
    p_vd.add_argument("--positive-norm", action="store_true")
    p_vd.set_defaults(func=cmd_vd)

    for name, fn in (("complement", cmd_complement), ("saturate", cmd_saturate)):
        p = sub.add_parser(name)
        p.add_argument("--file")
        p.set_defaults(func=fn)

    p_roots = sub.add_parser("roots", help="exhaustive fixed-norm vectors")
    p_roots.add_argument("--norm", type=int, required=True)
    p_roots.add_argument("--file")
    p_roots.set_defaults(func=cmd_roots)

    p_walls = sub.add_parser("walls", help="(-2)-walls orthogonal to v")
    p_walls.add_argument("--v", required=True)
    p_walls.add_argument("--file")
    p_walls.set_defaults(func=cmd_walls)

    p_min = sub.add_parser("mindeg", help="bounded search for the minimal polarization degree")
    p_min.add_argument("--norm-limit", type=int, default=20)
    p_min.add_argument("--box", type=int, default=10)
    p_min.add_argument("--jobs", type=int, default=1)
    p_min.add_argument("--file")
    p_min.set_defaults(func=cmd_mindeg)

    p_cert = sub.add_parser("verify-cert")
    p_cert.add_argument("--v", required=True)
    p_cert.add_argument("--degree", type=int, required=True)
    p_cert.add_argument("--file")
    p_cert.set_defaults(func=cmd_verify_cert)

    p_dk = sub.add_parser("disc-kernel")
    p_dk.add_argument("--isometry-file")
    p_dk.set_defaults(func=cmd_disc_kernel)

    p_cl = sub.add_parser("clifford")
    p_cl.add_argument("op", choices=["mul", "reversal", "phi-a", "find-a", "gspin", "project"])
    p_cl.add_argument("--file")
    p_cl.set_defaults(func=cmd_clifford)

    p_enum = sub.add_parser("enumerate")
    p_enum.add_argument("--rank", type=int, required=True)
    p_enum.add_argument("--max-disc", type=int, required=True)
    p_enum.add_argument("--even", action="store_true")
    p_enum.add_argument("--csv", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_cdc = sub.add_parser("check-disc-complement")
    p_cdc.add_argument("--file")
    p_cdc.set_defaults(func=cmd_check_disc_complement)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, AssertionError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
