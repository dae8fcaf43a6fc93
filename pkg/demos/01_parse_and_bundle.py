"""
Parsing a co-authorship network and bundling repeat collaborations
==================================================================

A co-authorship network is a hypergraph: authors are vertices and every
paper is a hyperedge (the set of its authors).  Teams that publish
together repeatedly produce hyperedges that are identical as sets, and
bundling merges those into one paper-node with a multiplicity.
"""

from hyperlay import bundle, degree_profile, parse_hypergraph

# The edgelist format is one paper per line.  The trio ana/bob/carol
# published twice; dana and erik only show up once each.
network = b"""
# a tiny working group
ana bob carol
ana bob carol
ana bob
carol dana   # one cross-group paper
erik
"""

h = parse_hypergraph(network, "edgelist")
print(f"authors:    {h.authors}")
print(f"hyperedges: {h.hyperedges}")

# Bundling keys on exact set equality, so the duplicated trio collapses
# into a single paper-node with multiplicity 2.
g = bundle(h)
print(f"\npaper-nodes after bundling ({g.n_papers} of {len(h.hyperedges)}):")
for paper in g.paper_nodes:
    members = ", ".join(g.author_nodes[i].identifier for i in paper.members)
    print(f"  x{paper.multiplicity}  [{members}]")

# An author incident to exactly one bundled link is pendant: it will be
# pinned next to its paper-node instead of floating freely.
print("\npendant flags:")
for author in g.author_nodes:
    print(f"  {author.identifier}: {'pendant' if author.pendant else 'free'}")

# Degree metrics survive bundling because publication counts are weighted
# by multiplicity.
cardinalities, publications = degree_profile(g)
print(f"\nteam-size histogram: {cardinalities}")
print(f"publications per author: {publications}")
