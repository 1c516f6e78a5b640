# %% [markdown]
# # Hankel operators and the commutator identities
#
# `H_phi f = P^-(phi f)` and `H~_psi g = P(psi g)`.  Truncated Toeplitz
# operators factor through them: `A^theta_phi C_theta = H~_theta H_{conj(theta) phi} C_theta`.

# %%
import numpy as np

from modelspace import BlaschkeProduct, LaurentSymbol, RunConfig, fixture_suite, split_space, verify_identity

Z = BlaschkeProduct.zpow
rng = np.random.default_rng(2)
phi = LaurentSymbol(-3, rng.uniform(-1, 1, 7) + 1j * rng.uniform(-1, 1, 7))
s = split_space(Z(4), Z(4))
lhs = s.A("theta", "theta", phi) @ s.c_theta
rhs = s.HH(s.theta, "theta", s.s_theta.conj() * phi, "theta") @ s.c_theta
print("factorisation residual:", (lhs - rhs).norm())

# %% [markdown]
# The failure of the naive symmetry is measured exactly by Hankel products,
# e.g. `A C_{alpha,theta/alpha} - C_{alpha,theta/alpha} A^* P_alpha =
# H~_alpha H_phi C_theta - H~_theta H_phi C_alpha P_alpha`.

# %%
theta = BlaschkeProduct((0.3, -0.6j, 0.2 + 0.2j, 0.5))
alpha = BlaschkeProduct((-0.6j, 0.5))
for ident in ("han1", "han2", "han3", "cor7-3", "eq7-8"):
    print(f"{ident:<7}", f"{verify_identity(ident, Z(6), Z(2)).residual:.1e}",
          f"{verify_identity(ident, theta, alpha).residual:.1e}")

# %% [markdown]
# The displayed 3x5 example: `H~_{z^3} H_phi C_{z^5}` has rows
# `(0,0,0,a-4,a-3)`, `(0,0,a-4,a-3,a-2)`, `(0,a-4,a-3,a-2,a-1)`.

# %%
a = {n: n for n in range(-4, 3)}  # a_n = n makes the pattern readable
phi = LaurentSymbol(-4, [a[n] for n in range(-4, 3)])
s = split_space(Z(5), Z(3))
print((s.HH(s.alpha, "alpha", phi, "theta") @ s.c_theta).matrix.real)

# %% [markdown]
# Every displayed matrix is rebuilt and compared by the fixture suite.

# %%
for r in fixture_suite(RunConfig()):
    print(f"{r.identity_id:<24} max entry difference {r.extras['entrywise_max']:.1e}")
