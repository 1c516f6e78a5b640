# %% [markdown]
# # Conjugations on model spaces
#
# `C_theta f = theta conj(z f)` is a conjugation on `K_theta`.  For a divisor
# `alpha` of `theta` there is a second one, `C_{alpha,theta/alpha}`, acting as
# `C_alpha` on `K_alpha` and as `alpha C_{theta/alpha} conj(alpha)` on
# `alpha K_{theta/alpha}`.  Antilinear maps are stored as the matrix `M` of
# `v -> M conj(v)`; a conjugation is then exactly a unitary symmetric matrix.

# %%
import numpy as np

from modelspace import AntilinearMap, BlaschkeProduct, c_pair, check_conjugation, diamond, split_space

s = split_space(BlaschkeProduct.zpow(5), BlaschkeProduct.zpow(3))
print("C_{z^5}:\n", s.c_theta.matrix.real)
print("C_{z^3,z^2}:\n", s.c_split.matrix.real)
v = np.array([1, 2j, 3, 4 + 1j, 5])
print("C_{z^3,z^2} v =", s.c_split(v))

# %% [markdown]
# Both are conjugations; the product of a non-symmetric unitary with J is not.

# %%
print(check_conjugation(s.c_theta), check_conjugation(s.c_split))
print(check_conjugation(AntilinearMap(np.array([[0, -1], [1, 0]]))))

# %% [markdown]
# A pair of conjugations gives `C_dia = (C1 <> C2)/sqrt2`, `C_box = (C1 [+] C2)/sqrt2`
# and the orthogonal projection `Q = C_dia C_box` of rank N on `H (+) H`.
# Its kernel is `{C1 f (+) -C2 f}`; with the roles of C1 and C2 exchanged the
# vectors are *not* annihilated unless `(C1 C2)^2 = I`.

# %%
c1, c2 = s.c_split, s.c_theta
c_dia, c_box, q = c_pair(c1, c2)
print("||Q^2 - Q|| =", (q @ q - q).norm(), " rank Q =", np.linalg.matrix_rank(q.matrix, tol=1e-9))
print("||Q (C1 <> -C2)|| =", (q @ diamond(c1, -c2)).norm())
print("||Q (C2 <> -C1)|| =", (q @ diamond(c2, -c1)).norm())

# %% [markdown]
# The same objects exist for general Blaschke divisors, built by quadrature.

# %%
theta = BlaschkeProduct((0.3 + 0.2j, -0.5, 0.1j, 0.6), 1j)
alpha = BlaschkeProduct((-0.5, 0.1j))
t = split_space(theta, alpha, 1024)
print("conjugation defects:", check_conjugation(t.c_theta), check_conjugation(t.c_split))
rhs = t.eb @ t.A("theta", "beta", t.s_alpha.conj()) + t.eba @ t.p_alpha
print("C_theta C_{alpha,theta/alpha} vs P_{theta/alpha} conj(alpha) + (theta/alpha) P_alpha:",
      (t.c_theta @ t.c_split - rhs).norm())
