"""End-to-end tracking on a synthetic bouncing-square sequence.

Builds random weights, writes a small sequence to disk, runs the frame loop
(fixed template, per-frame search crop, Hanning-windowed argmax), and emits
submission-format result files plus an overlay image.
"""

import os

import numpy as np
from PIL import Image, ImageDraw

from movitrack.config import ModelConfig
from movitrack.evalio import TrackRun, read_sequence, write_results
from movitrack.model import TrackerModel
from movitrack.synth import moving_square_sequence, write_sequence
from movitrack.tracker import Tracker
from movitrack.weights import random_store, save_weights

OUT = os.path.join(os.path.dirname(__file__), "demo_output")
os.makedirs(OUT, exist_ok=True)

weights_path = os.path.join(OUT, "random.mvtw")
save_weights(random_store(seed=3), weights_path)
print("weights:", weights_path)

seq_dir = os.path.join(OUT, "dataset", "bounce")
frames, boxes = moving_square_sequence(n_frames=10, height=240, width=320, seed=0)
write_sequence(seq_dir, frames, boxes, attributes=("FM",))
ann = read_sequence(seq_dir)
print("sequence:", ann.name, f"({len(ann.frame_paths)} frames)")

model = TrackerModel.from_file(weights_path, ModelConfig())
tracker = Tracker(model, use_window=True)

import time

state = tracker.init(frames[0], ann.boxes[0])
pred_boxes, times = [ann.boxes[0]], [0.0]
for i, frame in enumerate(frames[1:], start=1):
    t0 = time.perf_counter()
    box = tracker.track(state, frame)
    times.append(time.perf_counter() - t0)
    pred_boxes.append(box)
    print(f"  frame {i:2d}: box=({box.x:7.1f},{box.y:7.1f},{box.w:7.1f},{box.h:7.1f})"
          f"  {1e3 * times[-1]:6.1f} ms")

run = TrackRun(ann.name, tuple(pred_boxes), tuple(times))
results_dir = os.path.join(OUT, "results")
write_results(run, results_dir)
print("results:", os.path.join(results_dir, ann.name))

# draw the final prediction over the final frame
img = Image.fromarray(frames[-1])
draw = ImageDraw.Draw(img)
gt, pred = boxes[-1], pred_boxes[-1]
draw.rectangle([gt.x, gt.y, gt.x + gt.w, gt.y + gt.h], outline=(0, 255, 0), width=2)
draw.rectangle([pred.x, pred.y, pred.x + pred.w, pred.y + pred.h], outline=(255, 32, 32), width=2)
overlay = os.path.join(OUT, "last_frame_overlay.png")
img.save(overlay)
print("overlay:", overlay, "(green = groundtruth, red = prediction)")
print("note: with random weights the prediction is not expected to follow the target")
