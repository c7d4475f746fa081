# %% [markdown]
# # The command line
#
# The `anfield` command exposes the same data as text, CSV or JSON. Exit status is 0 on
# success, 1 when a verification suite fails and 2 on invalid input.

# %%
from anfield.cli import main

main(["data", "--k", "2", "--ell", "1"])

# %% [markdown]
# Every exact value carries a decimal annotation whose precision --digits controls.
# JSON output has sorted keys and is byte-for-byte reproducible.

# %%
main(["theta", "--k", "2", "--format", "csv", "--digits", "6"])

# %% [markdown]
# Invalid parameters are rejected with exit status 2.

# %%
print("exit status:", main(["data", "--k", "4", "--ell", "2"]))

# %% [markdown]
# Verification suites stream progress to stderr and summarise on stdout.

# %%
print("exit status:", main(["verify", "tables", "--k-max", "4"]))
