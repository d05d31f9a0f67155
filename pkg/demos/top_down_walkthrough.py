"""Follow one top-down pass through a small trained network.

Trains LeNet-300-100 for one epoch on a slice of MNIST (or random digits when
the data is absent), then runs the top-down pass for a single test image and
shows where the attention mass ends up: which hidden units are attended, how
the mass is conserved, and which input pixels carry importance.

    python demos/top_down_walkthrough.py [mnist_dir]
"""
import os
import sys

import numpy as np

from attnprune.attention import SelectionParams, init_attention, stage1_select, td_pass
from attnprune.data import Dataset, batcher, load_mnist
from attnprune.network import OptimizerState, build_network, evaluate, forward, train_step

data_dir = sys.argv[1] if len(sys.argv) > 1 else "/root/data/mnist"
if os.path.isdir(data_dir):
    train, test = load_mnist(data_dir)
    train = Dataset(train.images[:6000], train.labels[:6000])
    test = Dataset(test.images[:1000], test.labels[:1000])
else:
    print(f"{data_dir} not found, using random images (selection still runs, accuracy is chance)")
    rng = np.random.default_rng(0)
    train = Dataset(rng.random((600, 1, 28, 28), dtype=np.float32), rng.integers(0, 10, 600))
    test = Dataset(rng.random((100, 1, 28, 28), dtype=np.float32), rng.integers(0, 10, 100))

net = build_network("lenet300", seed=0)
opt = OptimizerState(learning_rate=0.01)
for x, y in batcher(train, 64, seed=0, epoch=0):
    train_step(net, (x, y), opt)
print(f"after one epoch: test error {evaluate(net, *test.as_pair()):.3f}")

# Stage 1 on its own: keep the largest positive contributions holding 70% of the mass.
contributions = np.array([0.5, -1.0, 2.0, 0.1, 1.4, 0.0])
print("stage 1 on", contributions.tolist(), "keeps indices", sorted(i for i, _ in stage1_select(list(enumerate(contributions)), 0.7)))

# A full pass for one image, seeded with its true label.
x, label = test.images[:1], int(test.labels[0])
trace = forward(net, x).sample(0)
importance, gating = td_pass(net, trace, init_attention(label, 10), SelectionParams(0.7))

for l, spec in enumerate(net.layers):
    g = gating[l].activity
    if spec.kind == "fc":
        print(f"{spec.name}: {np.count_nonzero(g)} of {g.size} inputs attended, "
              f"gating mass {g.sum():.6f}, importance on {np.count_nonzero(importance[spec.name])} connections")

# Importance on the output layer sits in the label's column only.
w3 = importance["fc3"]
print("fc3 importance per class column:", np.round(w3.sum(axis=0), 3).tolist(), "label", label)

# The input gating is an attention map over pixels; print it as coarse text.
pixels = gating[0].activity.reshape(28, 28)
levels = " .:*#"
scale = pixels.max() or 1.0
print("input attention (darker = more mass):")
for row in pixels[::2]:
    print("".join(levels[min(4, int(4 * v / scale + 0.999))] if v > 0 else " " for v in row))
