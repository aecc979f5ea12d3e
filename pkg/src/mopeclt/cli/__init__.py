"""
mopeclt CLI - command-line front end.

Commands:
    variance     Laurent window and limiting variance -> laurent.csv, variance.json
    converge     Cumulant sweep over n -> converge.csv, right_limit.csv
    verify       Verification suites -> verify.json
    dump-matrix  Matrix window -> matrix.csv
    oracle       Enumeration cross-check -> oracle.json

Example:
    $ mopeclt verify identities
    $ python -m mopeclt.cli.main converge --config run.json --out results/
"""

__all__ = []
