#!/usr/bin/env python3
"""Smoke test for the jacklab_py extension module.

Builds nothing itself: run `cargo build -p jacklab-py` (or --release) first.
The script locates the compiled cdylib under target/, exposes it as an
importable module, and checks a handful of exactly-known values.
"""

import importlib
import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libjacklab_py.so", "jacklab_py.so", "libjacklab_py.dylib")
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        sys.exit("jacklab_py cdylib not found; run `cargo build -p jacklab-py` first")
    stage = Path(tempfile.mkdtemp(prefix="jacklab-py-"))
    shutil.copy(lib, stage / "jacklab_py.so")
    sys.path.insert(0, str(stage))
    return importlib.import_module("jacklab_py")


def main():
    jk = load_module()
    checks = 0

    def expect(label, got, want):
        nonlocal checks
        assert got == want, f"{label}: got {got!r}, expected {want!r}"
        checks += 1
        print(f"  ok {label}: {got!r}")

    print(f"jacklab_py {jk.__version__}")

    # partitions and tableaux
    expect("partitions(4) count", len(jk.partitions(4)), 5)
    expect("conjugate", jk.conjugate([3, 2]), [2, 2, 1])
    expect("dominance", jk.dominates([2, 1], [1, 1, 1]), True)
    expect("kostka", jk.kostka([2, 1], [1, 1, 1]), 2)
    expect("syt_count", jk.syt_count([2, 2, 1]), 5)
    expect("QYT_{=3}(2,2,1)", jk.qyt_count([2, 2, 1], 3), 3)
    expect("QYT_{=4}(2,2,1)", jk.qyt_count([2, 2, 1], 4), 2)
    expect(
        "descent set of the 12-cell example",
        jk.descent_set([[1, 2, 3, 6, 8], [4, 5, 7, 11], [9, 10, 12]]),
        [3, 6, 8, 11],
    )

    # permutation combinatorics
    expect("A(3,1)", jk.eulerian(3, 1), 4)
    expect("S(3,2)", jk.stirling2(3, 2), 3)
    expect("(3,2)-restricted total",
           sum(jk.restricted_eulerian([3, 2], k) for k in range(5)), 10)
    expect("f_beta", jk.f_beta([2, 4, 5, 3, 1], [[1, 4], [2, 3, 5]]), [2, 1, 3, 5, 4])
    p, q = jk.rsk([2, 4, 5, 3, 1])
    expect("RSK insertion tableau", p, [[1, 3, 5], [2], [4]])
    expect("RSK recording tableau", q, [[1, 2, 3], [4], [5]])

    # Jack expansions: J̃_(2) = α(α+1) m_(2) + 2α² m_(1,1)
    tilde = dict((tuple(part), coeffs) for part, coeffs in jk.jack_expansion([2], tilde=True))
    expect("J̃_(2) at m_(2)", tilde[(2,)], ["0", "1", "1"])
    expect("J̃_(2) at m_(1,1)", tilde[(1, 1)], ["0", "0", "2"])
    expect("⟨J̃_(2), s_(1,1)⟩", jk.schur_coeff([2], [1, 1]), ["0", "-1", "1"])
    expect("a-table (2),(2)", jk.a_coeffs([2], [2]), ["0", "2", "0"])
    expect("b-table (2),(2)", jk.b_coeffs([2], [2]), ["2", "1"])

    # real-rootedness: z² - 1 yes, z² + 1 no
    expect("real roots of z²-1", jk.real_roots_only(["-1", "0", "1"]), True)
    expect("real roots of z²+1", jk.real_roots_only(["1", "0", "1"]), False)

    # rook boards
    expect("rook numbers B(1,1)", jk.rook_numbers([1, 1]), [1, 2, 0])
    expect("hit numbers B(1,1)", jk.hit_numbers([1, 1]), [0, 2, 0])
    expect("content board of (3,2)", jk.content_board([3, 2]), [2, 2, 2, 3, 3])
    c, d = jk.hook_boards(4, 1)
    expect("hook board C for (3,1)", c, [1, 1, 2, 3])
    expect("hook board D for (3,1)", d, [2, 2, 2, 3])

    # verification harness
    expect("registry size", len(jk.registry()) >= 19, True)
    report = json.loads(jk.run_check("prop4", 3))
    expect("prop4 n=3 passed", report["passed"], True)
    expect("prop4 check id", report["check"], "prop4")

    print(f"all {checks} smoke checks passed")


if __name__ == "__main__":
    main()
