#!/usr/bin/env python
"""Run every family sweep and collect the machine-readable reports in one file."""

import json
import subprocess
import sys
from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter

SWEEPS = [
        "--family uq-borel --n 2,3,4,5,7,12",
        "--family uq-borel --field 'QQ(q)'",
        "--family taft-wilson --p 3,5,7",
        "--family group-cyclic --n 1,2,3,6",
        "--family group-laurent",
]


def main():
    parser = arg_parser()

    args = parser.parse_args()

    reports = []
    failed = 0
    for sweep in SWEEPS:
        cmd = "{} -m hopfkit sweep {} --json --cutoff {}".format(sys.executable, sweep, args.cutoff)
        print(cmd)
        completed = subprocess.run(cmd, shell=True, stdout=subprocess.PIPE, universal_newlines=True)
        if completed.returncode != 0:
            print("Sweep failed (return value {}): {}".format(completed.returncode, sweep))
            failed += 1
        if completed.stdout:
            reports.append({"sweep": sweep, "report": json.loads(completed.stdout)})

    with open(args.output_file, "w", encoding="utf-8") as output_file:
        json.dump(reports, output_file, indent=2, sort_keys=True, ensure_ascii=False)
        output_file.write("\n")

    return -2 if failed else 0


def arg_parser():
    """Extracting CLI arguments"""
    p = ArgumentParser(add_help=False)

    p.add_argument("-c", "--cutoff", help="Largest antipode power to try", type=int, default=10000)
    p.add_argument("-o", "--output_file", help="Output file", type=str, default="sweeps.json")

    return ArgumentParser(description=__doc__,
                          formatter_class=ArgumentDefaultsHelpFormatter,
                          parents=[p])


if __name__ == '__main__':
    sys.exit(main())
