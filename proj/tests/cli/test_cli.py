"""End-to-end checks of the lctk command-line tool: outputs, files and exit codes."""

import json
import pathlib
import subprocess
import sys
import tempfile

EXE = str(pathlib.Path(sys.argv[1]).resolve())
failures = []


def run(*args, cwd):
    proc = subprocess.run([EXE, *args], cwd=cwd, capture_output=True, text=True)
    lines = proc.stdout.strip().splitlines()
    summary = json.loads(lines[-1]) if lines else None
    return proc.returncode, summary, proc.stdout


def check(cond, label):
    print(("ok   " if cond else "FAIL ") + label)
    if not cond:
        failures.append(label)


with tempfile.TemporaryDirectory() as tmp:
    d = pathlib.Path(tmp)
    cusp = {"vars": ["x", "y"], "terms": [{"e": [2, 0], "c": "1"}, {"e": [0, 3], "c": "1"}]}
    (d / "cusp.json").write_text(json.dumps(cusp))
    (d / "shifted.txt").write_text("x^2 + 2*x*y^2 + y^4 + y^5\n")

    code, s, _ = run("family", "info", "--n", "4", "--m", "1", cwd=d)
    check(code == 0 and s["tau"] == "5/1092" and s["ell"] == 28, "family info constants")

    code, s, _ = run("lct", "exact", "--input", "cusp.json", "--certificate", "cert.json", cwd=d)
    check(code == 0 and s["value"] == "5/6", "lct exact on the cusp")
    cert = json.loads((d / "cert.json").read_text())
    check(cert["conclusion"] == "exact" and cert["value"] == "5/6", "certificate file written")

    code, s, _ = run("lct", "exact", "--input", "shifted.txt", cwd=d)
    check(code == 0 and s["value"] == "7/10", "lct exact via a coordinate shift")

    code, s, _ = run("lct", "bound", "--input", "shifted.txt", "--weights", "2,1", cwd=d)
    check(code == 0 and s["lower"] == "1/2" and s["upper"] == "3/4" and not s["exact"], "lct bound")

    code, s, _ = run("newton", "polygon", "--input", "cusp.json", "--svg", "p.svg", "--json", "p.json", cwd=d)
    check(code == 0 and s["vertices"] == [[0, 3], [2, 0]] and s["diagonal_crossing"] == "6/5", "newton polygon")
    check((d / "p.svg").read_text().startswith("<svg"), "svg written")

    (d / "triple.json").write_text(json.dumps({"factors": [{"poly": {"vars": ["x", "y"], "terms": [{"e": [1, 0], "c": "1"}]}, "mult": 3}]}))
    (d / "ctx.json").write_text(json.dumps({"n": 4, "m": 1, "tau": "1/2", "K": 3}))
    code, s, _ = run("lct", "certify", "--product", "triple.json", "--context", "ctx.json", cwd=d)
    check(code == 2 and s["status"] == "refuted" and s["value"] == "1/3", "refuted certification exits 2")
    (d / "ctx3.json").write_text(json.dumps({"n": 3, "m": 1, "tau": "1/2", "K": 3}))
    code, s, _ = run("lct", "certify", "--product", "triple.json", "--context", "ctx3.json", cwd=d)
    check(code == 3 and s["status"] == "inconclusive", "inconclusive certification exits 3")

    code, s, _ = run("wps", "check", "--weights", "1,1,4,9", "--degree", "9", cwd=d)
    check(code == 0 and s["well_formed"] and s["fano"] and s["h_squared"] == "1/4", "wps check")
    code, s, _ = run("wps", "dims", "--weights", "1,1,4,9", "--degree", "9", "--twist", "12", cwd=d)
    check(code == 0 and s["h0"] == "28", "wps dims")

    code, s, out = run("family", "inequalities", "--n-min", "3", "--n-max", "3", cwd=d)
    check(code == 0 and s["verdict"] == "fail", "failing inequality report still exits 0")
    check(out.splitlines()[0].split("\t")[0] == "n", "TSV header")
    code, s, _ = run("family", "inequalities", "--n-min", "4", "--n-max", "200", cwd=d)
    check(code == 0 and s["verdict"] == "pass", "inequalities pass on [4, 200]")

    code, s, _ = run("family", "min-m", "--n", "4", "--claim", "newton", "--horizon", "50", cwd=d)
    check(code == 0 and s["m"] == 3, "min-m newton")
    code, s, _ = run("family", "min-m", "--n", "4", "--claim", "sigma", cwd=d)
    check(code == 0 and s["m"] == 1, "min-m sigma")

    args = ["family", "certify", "--n", "4", "--m", "1", "--trials", "25", "--seed", "7", "--r5", "y^5", "--r9", "0"]
    code, s, _ = run(*args, "--out", "a", cwd=d)
    check(code == 0 and s["certified"] == 25, "25 certified trials")
    code, _, _ = run(*args, "--out", "b", "--jobs", "4", cwd=d)
    same = all((d / "a" / f.name).read_bytes() == f.read_bytes() for f in (d / "b").iterdir())
    check(code == 0 and len(list((d / "b").iterdir())) == 26 and same, "reruns are byte-identical")
    trial = json.loads((d / "a" / "trial-0000.json").read_text())
    check(trial["certificate"]["conclusion"] == "certified" and trial["preconditions"]["f_polygon_contains_v"], "trial file contents")

    code, s, _ = run("family", "certify", "--n", "4", "--m", "4", "--trials", "1", "--seed", "1", "--r5", "y^5", "--out", "c", cwd=d)
    check(code == 1 and "allow-large" in s["error"], "workload guard")
    code, _, _ = run("family", "certify", "--n", "4", "--m", "1", "--trials", "1", "--seed", "1", "--r5", "x*y^4", "--out", "c", cwd=d)
    check(code == 1, "non-quasi-smooth instance rejected")
    code, _, _ = run("family", "info", "--n", "0", "--m", "1", cwd=d)
    check(code == 1, "invalid numeric flag")
    code, _, _ = run("family", "info", "--n", "4", "--m", "1", "--bogus", cwd=d)
    check(code == 1, "unknown flag rejected")
    code, _, _ = run("lct", "exact", "--input", "missing.json", cwd=d)
    check(code == 1, "missing input file")
    (d / "bad.txt").write_text("x^^2")
    code, s, _ = run("lct", "exact", "--input", "bad.txt", cwd=d)
    check(code == 1 and s["status"] == "error", "parse error")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
