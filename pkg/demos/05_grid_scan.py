"""
Scanning a grid of (n, ell)
===========================

The scan produces one row per polynomial with its mode interval and the
three sequence verdicts. The same table is available from the command
line: ``dompow scan --family both --n-max 60 --ell-max 10``.
"""

import io

from dompow.scan import scan, write_scan

buf = io.StringIO()
summary = write_scan(scan(["path", "cycle"], 60, 10), buf)
print(summary)
print("\n".join(buf.getvalue().splitlines()[:6]))
