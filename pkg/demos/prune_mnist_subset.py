"""Prune LeNet-300-100 on a slice of MNIST with the growing-lambda schedule.

A scaled-down version of the full protocol (which lives in
configs/mnist_lenet300.ini and runs through the ``attnprune`` command): 12000
training images, 3 pretraining epochs, one accumulation epoch, the seven
lambda phases and 3 retraining epochs. Takes a few minutes on one core.

    python demos/prune_mnist_subset.py [mnist_dir]
"""
import sys

from attnprune.attention import SelectionParams
from attnprune.data import Dataset, batcher, load_mnist
from attnprune.network import OptimizerState, build_network, evaluate, train_step
from attnprune.pruning import PersistentBuffer, lambda_ramp_schedule, run_schedule

data_dir = sys.argv[1] if len(sys.argv) > 1 else "/root/data/mnist"
train, test = load_mnist(data_dir)
# standardise with training statistics, as the shipped MNIST configs do
mean, std = train.images.mean(), train.images.std()
train = Dataset((train.images[:12000] - mean) / std, train.labels[:12000])
test = Dataset((test.images - mean) / std, test.labels)

net = build_network("lenet300", seed=0)
opt = OptimizerState(learning_rate=1e-3, momentum=0.9, weight_decay=5e-4)
batches = lambda epoch: batcher(train, 64, seed=0, epoch=epoch)
for epoch in range(3):
    for batch in batches(epoch):
        train_step(net, batch, opt)
reference = evaluate(net, *test.as_pair())
print(f"reference error {reference:.4f}")

V = PersistentBuffer.for_network(net)
schedule = lambda_ramp_schedule(final_retrain_epochs=3, population="all")
events = run_schedule(net, V, schedule, train.as_pair(), test.as_pair(), opt, batches,
                      SelectionParams(top_mass_fraction=1.0), reference_error=reference, first_epoch=3)

print("\nphase  lambda  layer  after / before    ratio   test error")
for e in events.of("mask_update"):
    print(f"{e['phase']:>5}  {e['lambda']:6.1f}  {e['layer']:<5}  {e['nonzero_after']:>6} / {e['nonzero_before']:<8}"
          f"  {e['layer_ratio']:7.1f}x  {e['test_error']:.4f}")
end = events.of("run_end")[0]
print(f"\nafter retraining: error {end['pruned_error']:.4f} "
      f"({100 * end['error_degradation']:+.2f} pp), global compression {end['global_ratio']:.1f}x")
