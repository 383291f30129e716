"""Classify the toric NCCRs of five rank-one singularities from weight data.

Each system is given only by its grading group and weights.  The script
validates the data, builds the graded quotient poset, and lists every
translation class of toric NCCRs: the rim encoding the upper set, and the
degrees of the module summands.
"""

from toricnccr import (
    FGGroup,
    grading_context,
    nccr_classes,
    translation_classes,
    validate,
)

SYSTEMS = {
    "A1 cone (conifold-like, dim 3)": (1, (), [[1], [1], [-1], [-1]]),
    "cA4 singularity (dim 3)": (1, (), [[2], [3], [-2], [-3]]),
    "class group Z x Z/2 (dim 3)": (1, (2,), [[1, 0], [1, 1], [-1, 0], [-1, 1]]),
    "class group Z x Z/3 (dim 3)": (1, (3,), [[1, 0], [1, 0], [-1, 1], [-1, 2]]),
    "class group Z x Z/4, extra torsion weight (dim 4)": (
        1,
        (4,),
        [[1, 0], [1, 1], [-1, 0], [-1, 1], [0, 2]],
    ),
}


def main():
    for title, (rank, torsion, vecs) in SYSTEMS.items():
        group = FGGroup(rank, torsion)
        ws = validate(group, [group.from_vector(v) for v in vecs])
        ctx = grading_context(ws)
        print(f"== {title}")
        print(f"   group {group}, weights {[str(w) for w in ws.weights]}")
        print(f"   graded quotient H = {ctx.group}, period p = {ctx.p}, "
              f"{ctx.orbit_count} orbits, conductor {ctx.conductor}")
        classes = translation_classes(ctx)
        summands = nccr_classes(ctx)
        print(f"   {len(classes)} toric NCCR(s) up to translation:")
        for i, (cls, V) in enumerate(zip(classes, summands)):
            note = f" (stabilizer order {cls.stabilizer_order})" if cls.stabilizer_order > 1 else ""
            print(f"     class {i}: rim {cls.rim}{note}")
            print(f"              {len(V)} summand degrees {V}")
        print()


if __name__ == "__main__":
    main()
