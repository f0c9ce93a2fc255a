# %% [markdown]
# # Trees by multiplicity
#
# Fix m. Starting from the half-line {0, m, m+1, ...}, remove minimal
# generators larger than F + 1 while keeping the concentration at two. For
# odd m the tree is finite; for even m it grows forever.

# %%
from concentration2 import EnumerationRequest, count_c2, level_sizes, tree_height, walk_tree

for node in walk_tree(EnumerationRequest("multiplicity-tree", 5)):
    print("  " * node.depth, node.semigroup, node.removed)

# %%
for m in (3, 5, 7, 9):
    print(m, count_c2(m), tree_height(m))

# %% [markdown]
# Level sizes by genus. The first list is for odd m and ends; the second is
# for even m and is cut at a genus bound.

# %%
print(level_sizes(7))
print(level_sizes(6, max_genus=18))

# %% [markdown]
# The elementary subtree keeps only removals below 2m. It is finite for
# every m.

# %%
for m in range(2, 10):
    print(m, count_c2(m, variant="elementary"), tree_height(m, variant="elementary"))
