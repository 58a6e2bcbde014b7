#!/usr/bin/env python3
"""Smoke test for the frobcount_py extension module.

Builds nothing itself: run `cargo build -p frobcount-py` first, then
`python3 python/smoke_test.py`. The script copies the built cdylib next
to itself under the importable name and exercises the bindings.
"""

import pathlib
import shutil
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libfrobcount_py.so",
        ROOT / "target" / "debug" / "libfrobcount_py.so",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p frobcount-py")
    tmp = tempfile.mkdtemp(prefix="frobcount_py_")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, pathlib.Path(tmp) / f"frobcount_py{suffix}")
    sys.path.insert(0, tmp)
    import frobcount_py

    return frobcount_py


def main():
    fc = load_module()

    ring = fc.Ring(2, ["x", "y"])
    assert ring.p == 2 and ring.vars == ["x", "y"]

    f = ring.poly("x + y")
    g = ring.poly("x*y")
    assert str(f * g) == "x^2*y + x*y^2"
    assert str(f**2) == "x^2 + y^2"  # characteristic 2

    ix = ring.ideal(["x"])
    iy = ring.ideal(["y"])
    ixy = ix.intersect(iy)
    assert str(ixy) == "<x*y>"
    assert ix.sum(iy).dimension() == 0
    assert ixy.dimension() == 1
    assert ring.ideal(["x^2*y"]).frobenius_root(1).equal(ring.ideal(["x"]))
    assert ixy.is_f_pure()
    assert not ring.ideal(["y^2 - x^3"]).is_f_pure()

    theta = ring.splitting(1, "x*y")
    assert theta.is_splitting()
    assert theta.is_compatible(ixy)
    assert theta.enumerate_compatible() == ["<0>", "<x>", "<y>", "<x*y>", "<x, y>"]
    primes = theta.count_primes()
    assert primes["counts"] == {0: 1, 1: 2, 2: 1}
    assert primes["all_within"]

    report = fc.check_system(ring, [ix, iy, ix.sum(iy)])
    assert report["pseudo_prime"] == "true"
    assert report["intersection_compatible"] == "true"

    non_example = fc.check_system(ring, [ix, iy, ix.sum(iy), ring.ideal(["x*y"])])
    assert non_example["pseudo_prime"] == "false"

    bound = fc.verify_bound(3)
    assert bound["max_e"] == [1, 3, 3, 1]
    assert bound["sharp"]
    assert bound["upper_bound_violations"] == 0

    print("smoke test passed")


if __name__ == "__main__":
    main()
