"""Check the closed forms against exhaustive ground truth.

brute_mais scans all vertex subsets for the largest acyclic one;
brute_minrank2 searches every GF(2) fitting matrix for the smallest
rank; check_decodable asks, receiver by receiver, whether the wanted
unit vector is reachable from the code columns plus side information.
"""

import math

from sncindex import codec, oracles, snc

print("MAIS formula vs exhaustive subset scan:")
for k, d, u in [(10, 3, 1), (12, 4, 2), (17, 6, 2), (16, 3, 2)]:
    inst = snc.SncInstance(k, d, u)
    order, witness = oracles.brute_mais(snc.build_graph(inst))
    print(f"  ({k},{d},{u}): formula={snc.mais(inst)} brute={order} witness={witness}")

print("\nminrank search vs constructed length:")
for k, d, u in [(5, 3, 1), (4, 2, 0), (5, 1, 1), (7, 3, 1), (5, 2, 1)]:
    inst = snc.SncInstance(k, d, u)
    graph = snc.build_graph(inst)
    stop = max(snc.mais(inst), math.ceil(snc.broadcast_rate(inst)))
    rank = oracles.brute_minrank2(graph, early_stop=stop, cap=28)
    status = snc.minrank_status(inst)
    print(f"  ({k},{d},{u}): brute={rank} predicted={status}")

print("\nalgebraic decodability of the expanded encoding matrix:")
spec = codec.build_code(snc.SncInstance(20, 9, 2))
flags = oracles.check_decodable(spec.graph, spec.expanded)
print(f"  (20,9,2): {int(flags.sum())}/20 receivers decodable")

print("\nseeded round-trip simulation:")
report = oracles.roundtrip_sim(spec, trials=200, seed=99)
print(f"  trials={report.trials} decodes={report.decodes} failures={report.failures}")
