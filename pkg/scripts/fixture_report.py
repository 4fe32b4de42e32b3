#!/usr/bin/env python3
"""Survey the bundled fixture algebras end to end.

For each quiver file: enumerate the universe, the torsion-class lattice and
every cotilting pair, then print a compact table of heart simples, critical
and special envelopes, and the injective-cogenerator cover.  With --out the
full JSON reports and the Hasse DOT files are written next to each other.

Usage: python scripts/fixture_report.py [--out reports/]
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from torsionheart.algebra import parse_algebra
from torsionheart.cli import heart_report, lattice_dot
from torsionheart.cotilting import cotilting_from_pair
from torsionheart.exceptions import NotCotiltingError
from torsionheart.heart import heart_simples
from torsionheart.torsion import is_hereditary
from torsionheart.torslattice import enumerate_torsion_classes
from torsionheart.universe import bit_indices, enumerate_indecomposables

FIXTURES = Path(__file__).parent.parent / "fixtures"


def survey(path: Path, out_dir: Path | None):
    t0 = time.monotonic()
    algebra = parse_algebra(path.read_text())
    bound = tuple(2 for _ in algebra.quiver.vertices)
    u = enumerate_indecomposables(algebra, bound)
    lattice = enumerate_torsion_classes(u)
    print(f"== {path.name}: F_{algebra.field.p}, {len(u.indecs)} indecomposables, "
          f"{lattice.n} torsion classes, {len(lattice.covers)} covers")
    n_heart_simples = []
    for i in range(lattice.n):
        pair = lattice.pair_of(i)
        try:
            data = cotilting_from_pair(pair)
        except NotCotiltingError:
            continue
        simples = heart_simples(pair)
        n_heart_simples.append(len(simples))
        shifted = sorted(s.index for s in simples if s.shifted)
        plain = sorted(s.index for s in simples if not s.shifted)
        tag = " hereditary" if is_hereditary(pair) else ""
        print(f"   T={sorted(bit_indices(pair.torsion_bits))}{tag}: "
              f"C={sorted(bit_indices(data.add_c_bits))}, "
              f"simples plain={plain} shifted={shifted}, "
              f"C0={list(data.c0.dims)}, C1={list(data.c1.dims)}")
        if out_dir is not None:
            payload, _ = heart_report(u, pair.torsion_bits)
            name = f"{path.stem}-T{'_'.join(map(str, bit_indices(pair.torsion_bits))) or 'empty'}.json"
            (out_dir / name).write_text(json.dumps(payload, indent=2,
                                                   sort_keys=True))
    # observed count comparison, recorded without asserting a theorem
    n_simple_modules = sum(1 for m in u.indecs if m.total_dim == 1)
    uniform = set(n_heart_simples) == {n_simple_modules}
    print(f"   heart-simple counts: {sorted(set(n_heart_simples))} "
          f"(simple modules: {n_simple_modules}; uniform: {uniform})")
    if out_dir is not None:
        (out_dir / f"{path.stem}-tors.dot").write_text(lattice_dot(u, lattice))
    print(f"   done in {time.monotonic() - t0:.1f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="directory for JSON/DOT reports")
    parser.add_argument("fixtures", nargs="*", default=None,
                        help="quiver files (default: bundled a2, a3, d4)")
    args = parser.parse_args()
    out_dir = None
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
    files = ([Path(f) for f in args.fixtures] if args.fixtures
             else [FIXTURES / n for n in ("a2.quiver", "a3.quiver", "d4.quiver")])
    for f in files:
        survey(f, out_dir)


if __name__ == "__main__":
    main()
