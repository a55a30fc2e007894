"""Evaluation protocol and grid-search walkthrough.

Scores the classical detector on synthetic validation scenes with the
euclidean pixel-distance protocol (corner accuracy and all-four-corners
receipt accuracy over thresholds 10..50), contrasts a high-contrast corpus
with a low-contrast one where edge detection falls apart, and runs a small
exhaustive grid search over the detector's tunables.

Run:  python3 demos/03_evaluate_and_tune.py
"""

import numpy as np

import receiptkit as rk
from receiptkit.evaluation import GroundTruth, ParameterGrid
from receiptkit.synthgen import AugmentationConfig, SceneConfig, augment_with_retries, compose_scene, fakes


def build_corpus(seed, n, *, receipt_value, background_value):
    aug = AugmentationConfig(scale_range=(0.8, 1.0), translate_range=(-0.1, 0.1),
                             rotate_range_degrees=(-20.0, 20.0),
                             projective_scale_range=(0.0, 0.0))
    cfg = SceneConfig(canvas_size=(540, 960))
    pairs = []
    for i in range(n):
        rng = np.random.default_rng([seed, i])
        w = int(rng.integers(90, 160))
        receipt = fakes.make_plain_receipt(w, int(w * rng.uniform(2.2, 3.0)), receipt_value)
        background = fakes.make_plain_background(540, 960, background_value)
        sample = augment_with_retries(compose_scene(receipt, [], background, rng, cfg), rng, aug)
        pairs.append((sample.image, GroundTruth(f"s{i}", sample.corners)))
    return pairs


def score(pairs, params):
    detections = [(truth, rk.detect_baseline(img, params)) for img, truth in pairs]
    return rk.evaluate(detections)


def show(name, report):
    print(f"\n{name}: {report.n_images} images, {report.n_absent} with no detection")
    print("  d     corners  receipts")
    for d in report.thresholds:
        print(f"  {d:3g}   {report.corner_accuracy[d]:7.2%}  {report.receipt_accuracy[d]:8.2%}")


params = rk.tuned_params()
high = build_corpus(1, 25, receipt_value=255, background_value=0)
low = build_corpus(2, 25, receipt_value=250, background_value=240)
show("white receipt on black (easy)", score(high, params))
show("white receipt on near-white (the failure mode)", score(low, params))

# --- a small exhaustive sweep ------------------------------------------------
grid = ParameterGrid(kernels=(3, 5, 7), threshold1=(0.0, 50.0, 100.0),
                     threshold2=(0.0, 50.0), epsilon_fractions=(0.02, 0.06))
print(f"\nsweeping {grid.size} parameter combinations on 10 validation scenes...")
best, report = rk.tune_baseline(high[:10], grid)
print("best:", best)
show("tuned on the easy corpus", report)
