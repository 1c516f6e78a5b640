# %% [markdown]
# # Model spaces and their bases
#
# A finite Blaschke product `theta` of degree N defines the N-dimensional
# model space `K_theta = H^2 (-) theta H^2`.  The package represents it by the
# Takenaka-Malmquist orthonormal basis, sampled on an equispaced grid of the
# unit circle.  For `theta = z^N` the basis is `1, z, ..., z^(N-1)`.

# %%
import numpy as np

from modelspace import BlaschkeProduct, LaurentSymbol, kernels, model_project, tm_basis
from modelspace.model_space import blaschke_divide

theta = BlaschkeProduct((0.3 + 0.2j, -0.5, 0.1j, 0.6), constant=1j)
basis = tm_basis(theta, 1024)
print("dimension:", basis.dim)
print("Gram matrix off-identity:", np.linalg.norm(basis.gram() - np.eye(basis.dim)))

# %% [markdown]
# Divisors: `alpha` divides `theta` when its zeros (with multiplicity) are
# among those of `theta`; the quotient is again a Blaschke product.

# %%
alpha = BlaschkeProduct((-0.5, 0.1j))
beta = blaschke_divide(alpha, theta)
print("theta / alpha =", beta.label())
z = 0.2 - 0.4j
print("alpha(z) beta(z) - theta(z) =", abs(alpha(z) * beta(z) - theta(z)))

# %% [markdown]
# Reproducing kernels: `<f, k_lambda> = f(lambda)` for every `f` in `K_theta`.

# %%
lam = 0.25 + 0.5j
k, k_tilde = kernels(theta, lam, 1024)
coords = np.array([1.0, -2j, 0.5, 1 + 1j])
f = basis.reconstruct(coords)
pairing = np.mean(f.samples * np.conj(k.samples))
print("<f, k_lambda> =", pairing, " f(lambda) =", basis.evaluate(coords, lam))

# %% [markdown]
# The orthogonal projection onto `K_theta` can be computed two ways: through
# the basis, or by the Riesz-projection route `theta P^- conj(theta) P`.

# %%
rng = np.random.default_rng(0)
g = LaurentSymbol(-6, rng.standard_normal(13) + 1j * rng.standard_normal(13)).sample(1024)
print("difference of the two projections:", np.linalg.norm(model_project(g, basis) - basis.coordinates(g)))
