"""The single edge: one parameter, two very different algebras.

For two adjacent generators the sandwich algebra is 3-dimensional and the
parameter space is a line.  At f = 0 we get the Heisenberg algebra, at any
nonzero value a copy of sl2.
"""
from extremal_lie.analyze import analyze, lower_central_series, specialize, verify_lie
from extremal_lie.fields import Field, FieldSpec, QQ
from extremal_lie.graphs import complete_graph
from extremal_lie.pipeline import run_full

res = run_full(complete_graph(2), QQ())
rep = res.report()
print(f"dim L(0) = {rep['dimL0']}, dim X = {rep['dimX']}, {rep['statement']}")
print("basis words:", res.basis.words)
print("free parameters:", [res.state.name(v) for v in res.state.F])
for (x, b), vec in sorted(res.table.entries.items()):
    print(f"  [e{x}, e{b}] =", " + ".join(f"({p.to_str(res.state.name)}) e{c}" for c, p in vec.items()) or "0")

F101 = Field(FieldSpec("PrimeField", 101))
v = res.state.F[0]
for value in (0, 1, 37):
    vals = {v: F101(value)}
    L = specialize(res.table, res.state, vals, F101)
    checks = verify_lie(L, res.table, res.state, vals)
    a = analyze(L)
    print(f"f = {value:2d}: lower central series {lower_central_series(L)}, "
          f"semisimple part {a['quotientDim']} ({a['typeLabel']}), checks {checks}")
