"""Synthetic training-data generation walkthrough.

Composes receipts onto backgrounds (with up to two unannotated interfering
receipts underneath), applies random projective distortion with exact corner
tracking, expands the four corner boxes to their maximal squares, and writes
an annotated dataset: images/NNNNNN.png + manifest.jsonl + summary.json.

Run:  python3 demos/02_synthetic_dataset.py
"""

import json
from pathlib import Path

import numpy as np

from receiptkit.synthgen import (
    AugmentationConfig,
    SceneConfig,
    expected_image_count,
    export_ground_truth,
    export_voc,
    fakes,
    generate_dataset,
)

out_dir = Path(__file__).parent / "out" / "02"
rng = np.random.default_rng(11)

receipts = fakes.make_receipt_corpus(rng, 6)
backgrounds = fakes.make_background_corpus(rng, 3, (1080, 1920))

manifest = generate_dataset(
    receipts,
    backgrounds,
    out_dir / "dataset",
    scene_cfg=SceneConfig(),                       # 1080x1920, 30% margins
    aug_cfg=AugmentationConfig(variants_per_scene=2),
    seed=11,
)
print(f"emitted {len(manifest.records)} images "
      f"(law: {len(receipts)} receipts x 3 = {expected_image_count(len(receipts), 2)}, "
      f"{manifest.skipped_variants} variants skipped)")

rec = manifest.records[1]  # an augmented variant
print("\none manifest record:")
print(json.dumps({k: rec[k] for k in ("image", "width", "height")}, indent=2))
print("corners:", [(c["label"], round(c["x"], 2), round(c["y"], 2)) for c in rec["corners"]])
for box in rec["boxes"]:
    side = box["xmax"] - box["xmin"]
    print(f"  box {box['label']}: side {side:.1f} px "
          f"(expanded to the nearest image edge, centred on the corner)")

# side outputs the evaluator and a detector trainer consume
export_ground_truth(manifest.records, out_dir / "dataset" / "ground_truth.jsonl")
export_voc(manifest.records, out_dir / "dataset" / "voc")
print("\ndataset written to", out_dir / "dataset")
