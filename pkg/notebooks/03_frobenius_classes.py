# %% [markdown]
# # Fixed Frobenius number
#
# Semigroups of concentration two with a given Frobenius number fall into
# classes. Each class has one irreducible member at its top, and every member
# climbs to it by repeatedly adjoining a mirrored gap.

# %%
from concentration2 import ascend, class_members, enumerate_c2_frobenius, from_generators

for cls in enumerate_c2_frobenius(9):
    print(cls.root, len(cls))

# %%
top = from_generators([5, 6, 7, 8])
for node in class_members(top).nodes:
    print("  " * node.depth, node.semigroup, node.removed)

# %%
print(ascend(from_generators([8, 10, 11, 12, 13, 14, 15, 17])))

# %%
for F in range(1, 22):
    classes = enumerate_c2_frobenius(F)
    print(F, len(classes), sum(len(c) for c in classes))
