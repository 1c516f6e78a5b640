# %% [markdown]
# # Which conjugations commute with the shift?
#
# Conjugations of the form `C_beta f = beta conj(z f)` are enumerated at
# monomial scale by solving the intertwining constraint on a finite window
# of Fourier indices and testing each unimodular symbol `z^k`.

# %%
from modelspace import dichotomy_check, mz_conjugation_enumerate
from modelspace.operators import orthogonal_splittings

res = mz_conjugation_enumerate(3, 5, 0)
print("C_beta(K_{z^3}) in K_{z^5} for beta = z^k with k in", res.admissible_betas)
print("with gamma = z:", mz_conjugation_enumerate(1, 2, 1).admissible_betas)
for n in range(2, 7):
    print(f"K_z^{n} -> itself:", mz_conjugation_enumerate(n, n, 0).admissible_betas)

# %% [markdown]
# A conjugation on `K_{z^5}` that restricts to such conjugations on `K_{z^3}`
# and on its complement is one of exactly two.

# %%
print(sorted(c.label for c in dichotomy_check(3, 5)))
print("orthogonal splittings of K_{z^5}:", orthogonal_splittings(3, 2))
