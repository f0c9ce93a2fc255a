# %% [markdown]
# # Wilf's inequality
#
# For every semigroup visited, compute the slack (e - 1) n - g, where e is
# the embedding dimension and n counts elements below F. A negative slack
# would be a counterexample.

# %%
from concentration2 import EnumerationRequest, from_generators, verify_family, wilf_check

print(wilf_check(from_generators([5, 7, 9])))

# %%
for m in (3, 5, 7, 9):
    print(m, verify_family(EnumerationRequest("multiplicity-tree", m)).summary_line())

# %%
for m in (4, 6, 8):
    request = EnumerationRequest("multiplicity-tree", m, max_genus=m + 14)
    print(m, verify_family(request).summary_line())

# %%
for F in (15, 19, 23):
    print(F, verify_family(EnumerationRequest("frobenius", frobenius=F)).summary_line())
