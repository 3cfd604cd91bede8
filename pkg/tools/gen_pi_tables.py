"""Regenerate src/gaugecalc/data/pi_tables.csv.

Classical rows come from the Bott-periodicity rules in lie_catalog; the
exceptional rows are curated low-degree values.
"""

from pathlib import Path

from gaugecalc.lie_catalog import SimpleType, bott_pi

EXCEPTIONAL_ROWS = {
    # family: (degrees with pi_i = 0 beyond pi_3 = Z, extra nonzero entries)
    "G2": (range(4, 6), {6: "Z/3"}),
    "F4": (range(4, 8), {8: "Z/2"}),
    "E6": (range(4, 9), {}),
    "E7": (range(4, 11), {}),
    "E8": (range(4, 15), {}),
}

OUT = Path(__file__).resolve().parents[1] / "src" / "gaugecalc" / "data" / "pi_tables.csv"


def rows():
    for n in range(2, 25):
        t = SimpleType("SU", n)
        for i in range(1, 2 * n + 1):
            yield "SU", n, i, bott_pi(t, i).render()
    for n in range(1, 13):
        t = SimpleType("Sp", n)
        for i in range(1, 4 * n + 2):
            yield "Sp", n, i, bott_pi(t, i).render()
    for n in range(7, 33):
        t = SimpleType("Spin", n)
        for i in range(1, n - 1):
            yield "Spin", n, i, bott_pi(t, i).render()
    for fam, (zeros, extra) in EXCEPTIONAL_ROWS.items():
        yield fam, "", 1, "0"
        yield fam, "", 2, "0"
        yield fam, "", 3, "Z"
        for i in zeros:
            yield fam, "", i, "0"
        for i, v in extra.items():
            yield fam, "", i, v


def main() -> None:
    lines = ["# generated by tools/gen_pi_tables.py; one record per (family, n, i)", "family,n,i,value"]
    lines += [f"{f},{n},{i},{v}" for f, n, i, v in rows()]
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
