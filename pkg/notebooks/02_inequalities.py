# The rewriting operators S_k and the explicit inequality families.
#
# Run with:  python3 notebooks/02_inequalities.py

# %%
from crystalpoly import LinearForm, Weight, beta_bar, generate_xi, iota_a, iota_affine, s_bar
from crystalpoly.affine import LambdaAffine, generate_xi_prime_affine, phi_l
from crystalpoly.type_a import LambdaA, admissible_partitions, c_table, generate_xi_prime_a, phi_mu

iota = iota_affine()
lam = Weight((2, -1))

# beta_bar_k = sigma_k - sigma_{k+}; crossing t_lam picks up -lam_{i_k}
for k in (1, -1, -2):
    print(f"beta_bar_{k} =", beta_bar(iota, lam, k))

# %%
# one rewrite of x_1 and of -x_{-1}; a second application changes nothing
f = s_bar(iota, lam, LinearForm.coordinate(1), 1)
print(f, "|", s_bar(iota, lam, f, 1))
print(s_bar(iota, lam, LinearForm.coordinate(-1, -1), -1))

# %%
# a truncation of the family generated by coordinate forms
xi = generate_xi(iota, lam, w=3, depth=2)
for form in xi:
    print("  ", form)

# %%
# Xi' for affine A_1: seeds x_{-k} + C_{-k}, and the explicit phi^(l) chain
la = LambdaAffine.from_coeffs((3, -2))
for l in range(5):
    print(f"phi^({l})_(-3) =", phi_l(la, 3, l), "  (explicit:", phi_l(la, 3, l, "explicit"), ")")
print(len(generate_xi_prime_affine(la, 4, 3)), "forms in a small Xi' truncation")

# %%
# type A_2: C-table and the forms phi^(mu) indexed by admissible partitions
lA = LambdaA.from_coeffs((1, -1))
print([[c_table(lA, j, i) for i in (1, 2)] for j in (1, 2)])
for mu in admissible_partitions(2, 2):
    print(mu, phi_mu(lA, 1, 2, mu))
print(len(generate_xi_prime_a(lA, 4, 3)), "forms in a small Xi' truncation")
