# Walking around the crystal Z^infty_iota[lam] for affine A_1^(1).
#
# Run with:  python3 notebooks/01_crystal_operators.py

# %%
from crystalpoly import (
    FinSuppVector, Weight, attainers, e_tilde, epsilon, f_tilde, iota_affine, phi, sigma, weight_of,
)

iota = iota_affine()
lam = Weight((2, -1))
zero = FinSuppVector.zero(lam)

# the sequence reads ..., 2, 1, 2, 1, t_lam, 1, 2, 1, 2, ...
print([iota.color_at(k) for k in range(-4, 0)], "t", [iota.color_at(k) for k in range(1, 5)])

# %%
# sigma_k at the zero vector: the negative side sees -<h_i, lam>
print({k: sigma(zero, iota, k) for k in range(-4, 5) if k})

# %%
# color 2 attains its maximum on the whole negative tail, so f_2 is undefined
# there but e_2 acts at the rightmost attainer
for i in (1, 2):
    r = attainers(zero, iota, i)
    print(i, r)
print("f_2(0) =", f_tilde(zero, iota, 2))
v = e_tilde(zero, iota, 2)
print("e_2(0) =", v, " wt =", weight_of(v, iota))

# %%
# v is killed by both e's: it is the highest weight vector
print([e_tilde(v, iota, i) for i in (1, 2)])

# %%
# a short f-path down from v; phi - epsilon always equals <h_i, wt>
x = v
for i in (2, 1, 1, 2):
    x = f_tilde(x, iota, i)
    wt = weight_of(x, iota)
    print(f"f_{i}: {x}  wt={wt}  eps={[epsilon(x, iota, c) for c in (1, 2)]}  phi={[phi(x, iota, c) for c in (1, 2)]}")
