"""Classical document-scanner walkthrough.

Builds a photo-like scene (a printed receipt dropped onto a textured
background and viewed at an angle), then runs the classical pipeline stage
by stage: grayscale, Gaussian blur, Canny edges, contours, polygon
simplification, corner ordering, and the four-point rectification.

Every intermediate image lands in demos/out/01/ so you can eyeball what
each stage contributes.

Run:  python3 demos/01_classical_scanner.py
"""

from pathlib import Path

import numpy as np

import receiptkit as rk
from receiptkit.synthgen import AugmentationConfig, SceneConfig, augment_with_retries, compose_scene, fakes

out_dir = Path(__file__).parent / "out" / "01"
out_dir.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(7)

# --- stage 0: a synthetic "photo" ------------------------------------------
receipt = fakes.make_text_receipt(rng, 240, 680)
background = fakes.make_background(rng, 1080, 1920, base=(70, 56, 48))
scene = compose_scene(receipt, [], background, rng, SceneConfig())
photo = augment_with_retries(
    scene, rng,
    AugmentationConfig(rotate_range_degrees=(-35, 35), projective_scale_range=(0.0, 0.08)),
)
assert photo is not None
rk.write_image(out_dir / "0_photo.png", photo.image)
print("ground-truth corners:", photo.corners)

# --- stage 1..3: grayscale, blur, edges -------------------------------------
params = rk.tuned_params()
gray = rk.to_grayscale(photo.image)
blurred = rk.gaussian_blur(gray, params.gaussian_kernel)
edges = rk.canny(blurred, params.canny_t1, params.canny_t2)
rk.write_image(out_dir / "1_gray.png", gray)
rk.write_image(out_dir / "2_blurred.png", blurred)
rk.write_image(out_dir / "3_edges.png", (edges * np.uint8(255)))

# --- stage 4..5: contours and the largest simplified polygon ----------------
contours = rk.find_contours(edges)
largest = max(contours, key=rk.polygon_area)
approx = rk.approx_polygon(largest, params.epsilon_fraction)
print(f"{len(contours)} contours; largest has {len(largest)} points, "
      f"area {rk.polygon_area(largest):.0f} px^2, simplifies to {len(approx)} vertices")

overlay = photo.image.copy()
for x, y in largest:
    overlay[y, x] = (0, 255, 0)
rk.write_image(out_dir / "4_largest_contour.png", overlay)

# --- stage 6: corners and rectification --------------------------------------
corners = rk.detect_baseline(photo.image, params)
print("detected corners:", corners)
if corners is not None:
    for label in rk.CORNER_LABELS:
        gx, gy = photo.corners.point(label)
        px, py = corners.point(label)
        print(f"  {label}: error {rk.corner_error((px, py), (gx, gy)):.2f} px")
    flat = rk.rectify(photo.image, corners)
    rk.write_image(out_dir / "5_rectified.png", flat)
    print("rectified size:", flat.shape[1], "x", flat.shape[0])
print("stages written to", out_dir)
