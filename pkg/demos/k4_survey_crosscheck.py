"""K4: generic semisimple quotient and a check in small characteristic.

A random point of X almost always gives an algebra with radical of
dimension zero here, i.e. a simple algebra of dimension 28 (type D4).  The
rational run is then repeated over the candidate bad primes and compared.
"""
from extremal_lie.analyze import generic_survey
from extremal_lie.fields import QQ
from extremal_lie.graphs import complete_graph
from extremal_lie.multichar import collect_primes, cross_validate
from extremal_lie.pipeline import run_full

res = run_full(complete_graph(4), QQ())
rep = res.report()
print(f"K4: dim L(0) = {rep['dimL0']}, dim X = {rep['dimX']}, profile {rep['profile']}")

survey = generic_survey(res.table, res.state, 101, trials=20, seed=0)
print(f"survey over GF(101): {survey['quotientDim']} {survey['typeLabel']} "
      f"in {survey['frequency']:.0%} of {survey['trials']} trials")
print("  tally:", survey["tally"])

primes = collect_primes(res)
print("primes to recheck:", primes.primes, f"({primes.note})")
diff = cross_validate(res.graph, rep, primes.primes + [5, 7])
for row in diff["perPrime"]:
    print(f"  GF({row['p']}): dim L(0) = {row['dimL0']}, dim X = {row['dimX']}, matches: {row['match']}")
