"""Survey how far horizontal translates of Galois-orbit averages get toward
spanning the bounded fixed arrays of S(n), and whether adding vertical
translates closes the gap.

    python3 scripts/rank_survey.py --max-n 6
"""

import argparse
import math

from tomofix.bounded import galois_orbits, orbit_average
from tomofix.linalg import rank
from tomofix.spectra import square_zero_locus


def survey(n: int) -> dict:
    points = square_zero_locus(n)
    dims = (math.lcm(*(p.x.order for p in points)), math.lcm(*(p.y.order for p in points)))
    orbits = galois_orbits(points)
    horiz, both = [], []
    for orbit in orbits:
        avg = orbit_average(orbit, dims)
        for t in range(len(orbit)):
            horiz.append(list(avg.translate((t, 0)).values))
            for s in range(len(orbit)):
                both.append(list(avg.translate((t, s)).values))
    # orbits whose points share an x value cannot be separated by horizontal shifts
    shared_x = [o for o in orbits if len({p.x for p in o}) < len(o)]
    return {
        "n": n,
        "dims": dims,
        "points": len(points),
        "orbits": len(orbits),
        "rank_horizontal": rank(horiz),
        "rank_both": rank(both),
        "shared_x_orbits": [[str(p) for p in o] for o in shared_x],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'n':>3} {'dims':>9} {'|V|':>4} {'orbits':>6} {'rank T_(t,0)':>12} {'rank T_(t,s)':>12}  shared-x orbits")
    for n in range(2, args.max_n + 1):
        r = survey(n)
        print(
            f"{r['n']:>3} {str(r['dims']):>9} {r['points']:>4} {r['orbits']:>6} "
            f"{r['rank_horizontal']:>12} {r['rank_both']:>12}  {r['shared_x_orbits']}"
        )


if __name__ == "__main__":
    main()
