#!/usr/bin/env python3
"""Run the shifted Fibonacci-block adjudication on a chosen grid.

The closed form and the convolution are computed side by side with the
brute count of their labelled target (weak compositions of n+k-1 with k
zeros and parts >= 2). The two computed columns are expected to agree
everywhere; the oracle column is expected to expose the mislabelled
target, e.g. at (n, k) = (2, 1): 3 vs 2.
"""

import argparse
import json
import sys

from compcount.weakforms import adjudicate_fib_block_identity


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, dest="max_n")
    parser.add_argument("--max-k", type=int, default=2, dest="max_k")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    report = adjudicate_fib_block_identity(args.max_n, args.max_k)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.agree else 1


if __name__ == "__main__":
    sys.exit(main())
