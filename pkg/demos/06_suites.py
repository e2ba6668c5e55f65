"""Running the property suites programmatically.

The same runs are available as ``flatcheck check --suite NAME``.  Small
bounds keep this script quick; the acceptance tests use the full family.
"""

from flatcheck.rings import ZMod
from flatcheck.suites import SUITES, SuiteConfig, run_suite

rings = (ZMod(4), ZMod(6), ZMod(9))
for name in SUITES:
    res = run_suite(SuiteConfig(name, rings, gen_bound=1, rel_bound=2))
    print(f"{name:10s} {'PASS' if res.passed else 'FAIL'} {res.instances} instances")
