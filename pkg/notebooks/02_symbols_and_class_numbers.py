# %% [markdown]
# # Quadratic symbols and class numbers
#
# Legendre, Jacobi and Kronecker symbols come back as plain ints. The class
# number of an imaginary quadratic field is computed by Dirichlet's finite
# character sum; a second route counts reduced binary quadratic forms.

# %%
from qfloor import class_number, class_number_dirichlet, h_star, jacobi, kronecker, legendre
from qfloor.classnum import count_reduced_forms, reduced_form_counts
from qfloor.symbols import kronecker_character

print(legendre(2, 7), jacobi(5, 21), kronecker(-7, -1), kronecker(-20, 4))

# %%
chi = kronecker_character(-23)
print(chi.tolist())

# %% [markdown]
# Fields of class number one (unique factorization) among small discriminants:

# %%
from qfloor.classnum import is_fundamental_discriminant

ones = [d for d in range(-3, -200, -1) if is_fundamental_discriminant(d) and class_number_dirichlet(d).h == 1]
print(ones)

# %%
for d in (-23, -47, -71, -4 * 13, -15):
    print(d, class_number_dirichlet(d).h, count_reduced_forms(d))

# %% [markdown]
# For range work a whole table is built at once by sweeping the reduced forms
# `(a, b, c)`: for fixed `a` and `b` the discriminants form an arithmetic
# progression in `c`.

# %%
table = reduced_form_counts(10_000)
print(table[163], table[9_991], class_number_dirichlet(-9_991).h)
print(class_number(-163), h_star(3), h_star(7), h_star(15))
