"""Run the acceptance criteria and print one line each; exit 1 if any fails."""

import sys

from affclass.selfcheck import run_all

if __name__ == "__main__":
    results = run_all()
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
