#!/usr/bin/env python3
"""Generate tables of imaginary parts of nontrivial zeta zeros using mpmath.

Writes one zero ordinate per line with 50 digits after the decimal point and
a '#' comment header recording provenance. With --zprime, appends two columns
re(zeta'(rho)) im(zeta'(rho)).

Usage:
  python3 gen_zeros.py N out.txt [--zprime]
"""

import sys

from mpmath import mp, zeta, zetazero


def format_fixed(x, places):
    sign = "-" if x < 0 else ""
    ax = abs(x)
    ip = int(ax)
    frac = ax - ip
    digits = []
    for _ in range(places):
        frac *= 10
        d = int(frac)
        digits.append(str(d))
        frac -= d
    return "%s%d.%s" % (sign, ip, "".join(digits))


def main():
    n = int(sys.argv[1])
    out = sys.argv[2]
    with_zprime = "--zprime" in sys.argv[3:]

    mp.dps = 68
    lines = [
        "# imaginary parts of the first %d nontrivial zeros of zeta" % n,
        "# generated by tools/gen_zeros.py (mpmath, dps=68), 50 decimal places",
    ]
    if with_zprime:
        lines.append("# columns: t re(zeta'(1/2+it)) im(zeta'(1/2+it))")
    for k in range(1, n + 1):
        rho = zetazero(k)
        row = format_fixed(rho.imag, 50)
        if with_zprime:
            zp = zeta(rho, derivative=1)
            row += " %s %s" % (format_fixed(zp.real, 50), format_fixed(zp.imag, 50))
        lines.append(row)
        if k % 10 == 0:
            print("  %d/%d" % (k, n), file=sys.stderr)
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
