"""Command-line entry point: ``vacuum-basis <command> [options]``.

Exit codes: 0 pass, 1 verification failure, 2 usage or config error,
3 resource cap exceeded.  Caps may also come from ``VACUUM_BASIS_CAP_*``
environment variables.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from .arrays import ArrayKind
from .character import graded_dims
from .derivations import Report, t_color, verify_color_shift_suite, verify_lemma_suite
from .lie import ColorLabel, IndexLabel, build_symplectic_model, dump_model
from .partitions import ResourceCapExceeded, enumerate_admissible, partition_records
from .soundness import run_all
from .theorem import verify_theorem

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def _env_cap(name: str) -> Optional[int]:
    v = os.environ.get(f"VACUUM_BASIS_CAP_{name}")
    return int(v) if v else None


@dataclass(frozen=True)
class RunConfig:
    command: str
    ell: int = 1
    level: int = 1
    max_degree: int = 3
    array: ArrayKind = ArrayKind.FULL
    output_format: str = "text"
    cap_slice_dim: Optional[int] = None
    cap_partitions: Optional[int] = None
    seed: int = 0
    samples: int = 10000
    max_power: int = 3
    corrupt_bracket: bool = False

    def validate(self) -> "RunConfig":
        if self.ell < 1:
            raise ConfigError("--ell must be >= 1")
        if self.level < 1:
            raise ConfigError("--level must be >= 1")
        if self.max_degree < 0:
            raise ConfigError("--max-degree must be >= 0")
        for cap in (self.cap_slice_dim, self.cap_partitions):
            if cap is not None and cap <= 0:
                raise ConfigError("caps must be positive")
        if self.samples < 1 or self.max_power < 1:
            raise ConfigError("--samples and --max-power must be >= 1")
        return self


# -- commands -------------------------------------------------------------------

def cmd_enumerate(cfg: RunConfig) -> tuple:
    by_degree = enumerate_admissible(cfg.ell, cfg.level, cfg.max_degree, cfg.array, cfg.cap_partitions)
    fmt = cfg.output_format
    if fmt == "structured":
        payload = {
            "ell": cfg.ell, "level": cfg.level, "array": cfg.array.value, "max_degree": cfg.max_degree,
            "counts": {str(n): len(p) for n, p in sorted(by_degree.items())},
            "partitions": {str(n): [partition_records(x) for x in p] for n, p in sorted(by_degree.items())},
        }
        return json.dumps(payload, ensure_ascii=False, indent=1) + "\n", EXIT_PASS
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "index", "partition"])
        for n, parts in sorted(by_degree.items()):
            for i, p in enumerate(parts):
                w.writerow([n, i, str(p)])
        return buf.getvalue(), EXIT_PASS
    lines = [f"# ell={cfg.ell} level={cfg.level} array={cfg.array.value} max_degree={cfg.max_degree}"]
    for n, parts in sorted(by_degree.items()):
        lines.append(f"degree {n}: {len(parts)}")
        lines.extend(f"  {p}" for p in parts)
    return "\n".join(lines) + "\n", EXIT_PASS


def _corrupted_model(rank: int):
    """Model with ``[t_1, 1̲1̲]`` set to zero (rescaling would go unnoticed by proportionality checks)."""
    model = build_symplectic_model(rank)
    br = [list(row) for row in model.brackets]
    i = model.idx(t_color(1, rank // 2))
    j = model.idx(ColorLabel.make(IndexLabel(1, True), IndexLabel(1, True), rank))
    br[i][j] = br[j][i] = ()
    return model.with_brackets(tuple(tuple(r) for r in br))


def _emit_report(rep: Report, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["status", "identity", "expected", "scalar"])
        for c in rep.checks:
            w.writerow(["PASS" if c.passed else "FAIL", c.identity, c.expected,
                        "" if c.scalar is None else str(c.scalar)])
        return buf.getvalue()
    if fmt == "structured":
        return json.dumps({
            "title": rep.title, "checks": len(rep.checks), "failures": len(rep.failures),
            "verdict": "PASS" if rep.passed else "FAIL",
            "lines": rep.lines(),
        }, ensure_ascii=False, indent=1) + "\n"
    return rep.text() + f"# checks={len(rep.checks)} failures={len(rep.failures)} " \
                        f"verdict={'PASS' if rep.passed else 'FAIL'}\n"


def cmd_verify_lemmas(cfg: RunConfig) -> tuple:
    if cfg.corrupt_bracket:
        rep = verify_lemma_suite(m_max=cfg.max_power, model=_corrupted_model(2 * cfg.ell))
    else:
        rep = verify_lemma_suite(cfg.ell, cfg.max_power)
    return _emit_report(rep, cfg.output_format), EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_verify_shift(cfg: RunConfig) -> tuple:
    adm = enumerate_admissible(cfg.ell, cfg.level, cfg.max_degree, ArrayKind.FULL, cfg.cap_partitions)
    parts = [p for n in sorted(adm) for p in adm[n]]
    rep = verify_color_shift_suite(cfg.ell, cfg.level, parts)
    return _emit_report(rep, cfg.output_format), EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_verify_theorem(cfg: RunConfig) -> tuple:
    table = verify_theorem(cfg.ell, cfg.level, cfg.max_degree, cfg.array,
                           cfg.cap_slice_dim, cfg.cap_partitions)
    return table.emit(cfg.output_format), EXIT_PASS if table.verdict else EXIT_FAIL


def cmd_dims(cfg: RunConfig) -> tuple:
    return graded_dims(cfg.ell, cfg.level, cfg.max_degree).emit(cfg.output_format), EXIT_PASS


def cmd_dump_model(cfg: RunConfig) -> tuple:
    return dump_model(build_symplectic_model(cfg.ell)), EXIT_PASS


def cmd_verify_soundness(cfg: RunConfig) -> tuple:
    results = run_all(cfg.samples, cfg.seed)
    ok = all(r.passed for r in results)
    if cfg.output_format == "structured":
        out = json.dumps({"results": [r.line() for r in results],
                          "verdict": "PASS" if ok else "FAIL"}, ensure_ascii=False, indent=1) + "\n"
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["status", "check", "instances", "failures"])
        for r in results:
            w.writerow(["PASS" if r.passed else "FAIL", r.name, r.instances, r.failures])
        out = buf.getvalue()
    else:
        out = "".join(r.line() + "\n" for r in results) + f"# verdict={'PASS' if ok else 'FAIL'}\n"
    return out, EXIT_PASS if ok else EXIT_FAIL


COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify-lemmas": cmd_verify_lemmas,
    "verify-shift": cmd_verify_shift,
    "verify-theorem": cmd_verify_theorem,
    "verify-soundness": cmd_verify_soundness,
    "dims": cmd_dims,
    "dump-model": cmd_dump_model,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vacuum-basis",
                                description="Combinatorial bases of vacuum modules L(kΛ0) of type C.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--ell", type=int, default=1, help="rank ℓ (dump-model: rank m; verify-lemmas: max ℓ)")
    p.add_argument("--level", type=int, default=1, help="level k")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--array", choices=[k.value for k in ArrayKind], default="full")
    p.add_argument("--format", dest="output_format", choices=["csv", "text", "structured"], default="text")
    p.add_argument("--cap-slice-dim", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--max-power", type=int, default=3)
    p.add_argument("--corrupt-bracket", action="store_true",
                   help="negative control: zero one bracket before verifying lemmas")
    return p


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cap_slice = ns.cap_slice_dim if ns.cap_slice_dim is not None else _env_cap("SLICE_DIM")
    return RunConfig(
        command=ns.command, ell=ns.ell, level=ns.level, max_degree=ns.max_degree,
        array=ArrayKind(ns.array), output_format=ns.output_format,
        cap_slice_dim=cap_slice, cap_partitions=_env_cap("PARTITIONS"),
        seed=ns.seed, samples=ns.samples, max_power=ns.max_power,
        corrupt_bracket=ns.corrupt_bracket,
    ).validate()


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    try:
        out, code = COMMANDS[cfg.command](cfg)
    except ResourceCapExceeded as e:
        print(f"resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
