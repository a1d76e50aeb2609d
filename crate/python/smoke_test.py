#!/usr/bin/env python3
"""Smoke test of the zeta3_py extension module.

Build the module first:

    cargo build -p zeta3-py --release

then run this script from anywhere; it locates the cdylib in the workspace
target directory, imports it under the importable name, and exercises the
main entry points against known exact values.
"""

import json
import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libzeta3_py.so",
        root / "target" / "debug" / "libzeta3_py.so",
        root / "target" / "release" / "zeta3_py.dll",
        root / "target" / "release" / "libzeta3_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("zeta3_py not built; run: cargo build -p zeta3-py --release")
    tmp = Path(tempfile.mkdtemp(prefix="zeta3py"))
    suffix = ".so" if built.suffix != ".dll" else ".pyd"
    shutil.copy(built, tmp / f"zeta3_py{suffix}")
    sys.path.insert(0, str(tmp))
    import zeta3_py

    return zeta3_py


def main():
    z = load_module()
    checks = 0

    def ok(cond, what):
        nonlocal checks
        assert cond, what
        checks += 1
        print(f"ok: {what}")

    ok(z.digits(10) == "1.2020569032", "zeta(3) to 10 digits")
    ok(z.digits(10, double=True) == "2.4041138063", "2*zeta(3) to 10 digits")

    nest = z.ContinuedFraction("nesterenko")
    conv = nest.convergents(6)
    ok(conv[6] == ("8424", "7008"), "Nesterenko convergent at depth 6")
    ok(nest.coefficients(4) == ("4", "2"), "Nesterenko coefficients at index 4")

    ap = z.ContinuedFraction("apery")
    ok(Fraction(ap.ratio(2)) == Fraction(351, 4) / 73, "Apery ratio at depth 2")
    u2, v2 = z.apery_pair(2)
    ok((Fraction(u2), Fraction(v2)) == (73, Fraction(351, 4)), "Apery pair at 2")

    t1 = z.ContinuedFraction("theoremA1")
    ok(t1.convergents(2)[2] == ("4809132", "2000376"), "expansion 1 at depth 2")
    err = abs(Fraction(t1.ratio(2)) - Fraction(z.digits(20, double=True)))
    ok(err < Fraction(1, 10**5), "expansion 1 depth 2 within 1e-5 of 2*zeta(3)")

    table = z.beta_table(1, 1, 0)
    ok(table["beta2"] == ["1", "16", "9"], "beta table row at (1,1,0)")
    star = z.beta_star(1, 1, 1)
    ok(star["p2"] == ["0", "16", "18"], "generating polynomial at (1,1,1)")
    ok(z.linear_form(1, 1, 1, 1) == ("68", "327/4"), "linear form at (1,1,1,1)")

    report = json.loads(z.verify("nesterenko", kmax=20))
    ok(
        all(c["status"] == "pass" for c in report["checks"]),
        "nesterenko suite passes via bindings",
    )

    print(f"\nsmoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
