#!/usr/bin/env python3
"""Regenerates tests/golden/*.json from the built CLI. Review diffs before committing."""
import json
import pathlib
import subprocess
import sys

CASES = {
    "eval_inverse": ["eval", "inv(q+i)", "--at", "2"],
    "eval_pole": ["eval", "inv(q+i)", "--at", "i"],
    "eval_syntax": ["eval", "q + * 3", "--at", "1"],
    "zeros_sphere": ["zeros", "(q-i)*(q+i)"],
    "zeros_isolated": ["zeros", "(q-i)*(q-j)"],
    "zeros_two_points": ["zeros", "(q-i)*(q-1-j)"],
    "zeros_real": ["zeros", "(q-2)^3*(q-k)"],
    "zeros_not_polynomial": ["zeros", "inv(q)"],
    "poles_inverse": ["poles", "inv(q+i)"],
    "poles_mixed": ["poles", "inv((q-i)^2*(q+i))*(q-3)"],
    "laurent_inverse": ["laurent", "inv(q+i)", "--center", "-i", "--nmax", "4"],
    "laurent_real": ["laurent", "inv(q-2)", "--center", "0", "--nmax", "6"],
    "region_disc": ["region", "--kind", "sigma_ball", "--p", "2i", "--R", "1", "--count", "8"],
    "region_omega": ["region", "--kind", "sigma_ball", "--p", "j", "--R", "2", "--count", "8"],
    "region_membership": ["region", "--kind", "shell", "--p", "i", "--R1", "0.5", "--R2", "2", "--at", "-i"],
    "region_csv": ["region", "--kind", "tau_set", "--p", "1+k", "--R", "0.5", "--count", "8", "--emit", "csv"],
    "region_unsupported": ["region", "--kind", "omega_ball", "--p", "i", "--R", "1"],
    "check_representation": ["check", "representation", "--trials", "100", "--seed", "7"],
    "check_unknown": ["check", "unknown"],
    "cw_small": ["cw", "--targets", "3", "--seed", "1"],
    "usage": ["frobnicate"],
}


def main():
    binary = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "build/sliceq")
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
    out_dir.mkdir(exist_ok=True)
    for name, args in CASES.items():
        proc = subprocess.run([str(binary), *args], capture_output=True, text=True)
        try:
            stdout = json.loads(proc.stdout)
        except json.JSONDecodeError:
            stdout = proc.stdout
        record = {"args": args, "exit": proc.returncode, "stdout": stdout}
        if name.startswith("cw"):
            record["tolerance"] = 1e-6
        (out_dir / f"{name}.json").write_text(json.dumps(record, indent=1) + "\n")


if __name__ == "__main__":
    main()
