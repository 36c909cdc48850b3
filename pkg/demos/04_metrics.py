"""Benchmark metrics from the ground up: overlap, success, precision, failures.

Simulates a tracker that gradually drifts off a target, then aggregates the
standard metric set and shows the overlap/AUC equivalence numerically.
"""

import numpy as np

from movitrack.evalio import (
    SequenceAnnotation,
    TrackRun,
    compute_metrics,
    iou,
    success_auc,
)
from movitrack.tracker import BBox

rng = np.random.default_rng(7)

# one 60-frame sequence; the prediction drifts linearly until overlap dies
gt = BBox(100.0, 100.0, 40.0, 40.0)
n = 60
preds = tuple(BBox(100.0 + 1.2 * t, 100.0 + 0.8 * t, 40.0, 40.0) for t in range(n))
ann = SequenceAnnotation(
    "drift",
    tuple(f"drift/{i:08d}.png" for i in range(n)),
    tuple(gt for _ in range(n)),
    frozenset({"FM", "SV"}),
)
run = TrackRun("drift", preds, tuple(0.02 for _ in range(n)))

report = compute_metrics([run], [ann])
print(f"frames:            {report.n_frames}")
print(f"mean overlap:      {report.mean_overlap:.4f}")
for tau, sr in sorted(report.success_rates.items()):
    print(f"success @ {tau:.2f}:    {sr:.4f}")
print(f"precision (20px):  {report.precision:.4f}")
print(f"precision (norm):  {report.precision_norm:.4f}")
print(f"failure rate:      {report.failure_rate:.4f}")
print(f"fps:               {report.fps:.1f}")
print(f"attribute slices:  {report.attribute_failure_rates}")

# the mean overlap IS the area under the success curve
ious = np.array([iou(p, gt) for p in preds])
auc = success_auc(ious, report.success_thresholds)
print(f"\nmean IoU = {ious.mean():.6f}  vs  success-curve AUC = {auc:.6f}")

# success is monotone in the threshold
curve = report.success_curve
print("success curve monotone non-increasing:", bool(np.all(np.diff(curve) <= 0)))
