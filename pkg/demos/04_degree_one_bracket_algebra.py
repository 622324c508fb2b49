"""Walk-through: the Lie superalgebra generated in degree one.

The degree-one generators close under graded brackets into a finite
dimensional superalgebra whose size follows a closed formula, and the
generators themselves satisfy the characteristic double-bracket
(trilinear) relation of parastatistics.

Run:  python3 demos/04_degree_one_bracket_algebra.py
"""

from cliffordweyl import (
    AlgebraSignature,
    OspContext,
    build_g,
    expected_dimension,
    fermi_gen,
    lie_bracket,
    osp22_check,
    star,
    super_bracket,
    twisted_adjoint,
    verify_invariance,
    verify_ps,
)

print("== dimensions of the bracket-generated superalgebra ==")
print("%-8s %-6s %-6s %s" % ("algebra", "found", "formula", "block dims"))
for n, k in ((1, 1), (2, 1), (3, 1), (1, 2)):
    ctx = OspContext(AlgebraSignature(n, k))
    basis, total, dims = build_g(ctx)
    print(
        "cw:%d,%d   %-6d %-6d even=%d odd=%d"
        % (n, 2 * k, total, expected_dimension(n, k), dims["even"], dims["odd"])
    )

print()
print("== trilinear relation on every generator triple ==")
for n, k in ((1, 1), (2, 1), (1, 2)):
    ctx = OspContext(AlgebraSignature(n, k))
    report = verify_ps(ctx)
    print(
        "cw:%d,%d  %d triples, %d failures"
        % (n, 2 * k, report["cases"], len(report["failures"]))
    )

print()
print("== degree one is stable under the bracket action of degree two ==")
ctx = OspContext(AlgebraSignature(2, 1))
report = verify_invariance(ctx)
print("cw:2,2  %d cases, %d failures" % (report["cases"], len(report["failures"])))

print()
print("== the twisted adjoint action vanishes across parities ==")
sig = AlgebraSignature(2, 1)
w1, w2 = fermi_gen(sig, 1), fermi_gen(sig, 2)
print("twisted_adjoint(w1, w2)      =", twisted_adjoint(w1, w2))
print("lie_bracket(w1 * w2, w1)     =", lie_bracket(star(w1, w2), w1))
print("super_bracket(w1, w2)        =", super_bracket(w1, w2))

print()
print("== the rank-(2,2) check on the smallest deformed members ==")
for n in (0, 1):
    report = osp22_check(n)
    print("ore:%d  %d cases, %d failures" % (n, report["cases"], len(report["failures"])))
