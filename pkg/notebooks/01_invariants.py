# %% [markdown]
# # Basic invariants
#
# A numerical semigroup is stored as the set of its gaps. Everything else
# (Frobenius number, multiplicity, genus, minimal generators) is read off
# that set.

# %%
from concentration2 import from_generators, ordinary, remove_element, add_frobenius

S = from_generators([5, 7, 9])
print(S)
print("gaps          ", S.gaps)
print("frobenius     ", S.frobenius)
print("multiplicity  ", S.multiplicity)
print("genus         ", S.genus)
print("concentration ", S.concentration)

# %% [markdown]
# The concentration is the largest distance between consecutive elements
# below the Frobenius number. Here 5, 7, 9, 10, 12 sit two apart at most.

# %%
print(S.elements_up_to(S.frobenius + 1))

# %% [markdown]
# Removing a minimal generator larger than F gives a semigroup with one
# more gap, and adjoining the new Frobenius number undoes it. ⟨5,7,9⟩ has
# no such generator, so use ⟨4,5,6,7⟩ instead.

# %%
R = from_generators([4, 5, 6, 7])
T = remove_element(R, 7)
print(R, "->", T, "F =", T.frobenius)
print(add_frobenius(T) == R)

# %%
print(ordinary(4), ordinary(4).concentration)
