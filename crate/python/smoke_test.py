"""Smoke test for the Python bindings.

Build and install first:
    cd crates/py && maturin build --release -o dist && pip install dist/*.whl
"""

import json
import sys

import tanisaki_py as t


def check(label, ok):
    print(("PASS" if ok else "FAIL"), label)
    return ok


def main():
    results = [
        check("dim of C^(1,2,1)_(1,2,1) is 5", t.dim("1,2,1", mu="1,2,1") == 5),
        check("Hilbert series 1 + 2t^2 + 2t^4", t.hilbert("1,2,1", mu="1,2,1") == [1, 0, 2, 0, 2]),
        check("dim C_(2,1,1) is 12", t.dim("2,1,1") == 12),
        check("vanishing case (2,2), (4)", t.dim("4", mu="2,2") == 0),
        check("e-form contains x1*x4", "x1*x4" in t.generators("1,2,1", "1,2,1", form="e")),
        check("Kostka-Foulkes K_(2,1),(1,1,1) = t + t^2", t.kostka_foulkes("2,1", "1,1,1") == [0, 1, 1]),
        check("column-strict count equals dim", t.column_strict_count("2,1", "1,1,1") == t.dim("1,1,1", mu="2,1")),
    ]

    family = json.loads(t.act("F_1", "2@1"))
    (component,) = family["components"]
    results.append(check("F_1 on (2) gives 2*x1 at (1,1)", component["nu"] == {"lo": 1, "parts": [1, 1]}
                         and component["element"] == [{"exp": [1, 0], "num": "2", "den": "1"}]))

    try:
        t.act("F_3", "2@1", window=(1, 3))
        results.append(check("window overflow raises", False))
    except ValueError:
        results.append(check("window overflow raises", True))

    try:
        t.dim("2,x")
        results.append(check("bad composition raises", False))
    except ValueError:
        results.append(check("bad composition raises", True))

    passed, report = t.verify("all", 3)
    report = json.loads(report)
    results.append(check(f"verify all for n <= 3 ({report['checks']} checks)", passed and report["failed"] == 0))

    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
