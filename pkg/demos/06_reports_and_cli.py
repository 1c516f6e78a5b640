# %% [markdown]
# # Reports and the command line
#
# Every identity is registered under a stable id.  A report carries the
# parameters, the residual (largest singular value of LHS - RHS), the
# tolerance and the verdict, and is reproducible from the seed.

# %%
import json

from modelspace import BlaschkeProduct, RunConfig, run_suite, verify_identity
from modelspace.cli import main
from modelspace.harness import REGISTRY, summarize

print(len(REGISTRY), "registered identities")
print(REGISTRY["sym3"].statement)
r = verify_identity("sym3", BlaschkeProduct.zpow(5), BlaschkeProduct.zpow(3), config=RunConfig(seed=7))
print(json.dumps(r.to_json(), sort_keys=True)[:200], "...")

# %% [markdown]
# The same through the CLI (`modelspace ...` or `python -m modelspace ...`).

# %%
main(["classify", "--alpha", "zpow:3", "--theta", "zpow:5"])
main(["verify", "--id", "han2", "--theta", "blaschke:[0.3,0.2;-0.5,0;0,0.1]", "--alpha", "blaschke:[-0.5,0]",
      "--symbol=-1:1,0;0:0.5,0.5;2:0,1"])

# %% [markdown]
# The whole registry over a monomial pair, a degenerate pair and a Blaschke pair.

# %%
print(summarize(run_suite(RunConfig(trials=2))).splitlines()[-1])
