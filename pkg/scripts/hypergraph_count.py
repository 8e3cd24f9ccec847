"""Compare the D6 action on the twelve balanced 3-torus arrays with the full
automorphism group of the support-triple hypergraph."""

from tomofix import balanced as bal


def main() -> None:
    triples = sorted(sorted(t) for t in bal.support_triples())
    print("support triples:", triples)
    autos = bal.hypergraph_automorphisms()
    group = bal.generate_group([bal.P, bal.Q])
    print(f"automorphisms fixing cell 0: {len(autos)}")
    print(f"<p, q>: {len(group)} elements, contained in automorphisms: {set(group) <= set(autos)}")
    rep = bal.dihedral_group_check()
    print(f"orbit of a1: {rep.orbit_size}, transitive={rep.transitive}, faithful={rep.faithful}")


if __name__ == "__main__":
    main()
