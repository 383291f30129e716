"""Draw the quivers of the endomorphism algebras of classified NCCRs.

Arrows are irreducible monomials between summand degrees: a monomial is an
arrow iff no proper divisor of it already lands on a summand degree.  The
cA4 singularity shows why composite arrows appear: its second class carries
loops labeled by degree-zero products such as x2*x4.
"""

from toricnccr import (
    FGGroup,
    emit_dot,
    endomorphism_quiver,
    grading_context,
    monomial_label,
    nccr_classes,
    validate,
)


def show(title, ctx, summands):
    quiver = endomorphism_quiver(ctx, summands)
    loops = quiver.loops()
    print(f"== {title}: {len(quiver.vertices)} vertices, {len(quiver.arrows)} arrows, "
          f"{len(loops)} loop(s)")
    for a in quiver.arrows:
        marker = "  (loop)" if a.is_loop() else ""
        print(f"   {quiver.vertices[a.source]} -> {quiver.vertices[a.target]}  "
              f"{monomial_label(a.exponents)}{marker}")
    print()
    return quiver


def main():
    group = FGGroup(1, ())
    ws = validate(group, [group.from_vector([v]) for v in (2, 3, -2, -3)])
    ctx = grading_context(ws)
    first, second = nccr_classes(ctx)
    show("cA4, first class", ctx, first)
    quiver = show("cA4, second class (two extra loops)", ctx, second)

    print("== DOT output for the second class")
    print(emit_dot(quiver))


if __name__ == "__main__":
    main()
