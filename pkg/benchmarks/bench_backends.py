"""Backend benchmark: numba-jitted kernels vs the pure-numpy fallbacks.

Runs each hot kernel on realistic shapes with both implementations and
then times the full learned pipeline under whichever backend this
process was started with (RAYFUSE_BACKEND). For the end-to-end numbers
of both backends, run twice:

    OMP_NUM_THREADS=1 python benchmarks/bench_backends.py
    OMP_NUM_THREADS=1 RAYFUSE_BACKEND=numpy python benchmarks/bench_backends.py
"""

import time

import numpy as np

from rayfuse.backend import USE_NUMBA, backend_name
from rayfuse.geometry import CameraIntrinsics, Pose
from rayfuse.kernels import trilinear
from rayfuse.nn import random_weights
from rayfuse.pipeline import fuse_frame
from rayfuse.synth import make_icosphere, render_depth
from rayfuse.volume import new_volume


def best_of(f, n=5):
    f()  # warm up / JIT
    best = float("inf")
    for _ in range(n):
        t0 = time.perf_counter()
        f()
        best = min(best, time.perf_counter() - t0)
    return best


def pair(label, fast, slow, work_desc):
    t_fast = best_of(fast)
    t_slow = best_of(slow)
    print(
        f"{label:34s} numba {t_fast * 1000:8.2f} ms   numpy {t_slow * 1000:8.2f} ms"
        f"   speedup {t_slow / t_fast:5.1f}x   ({work_desc})"
    )


def main():
    rng = np.random.default_rng(0)
    print(f"active backend: {backend_name()}\n")

    if USE_NUMBA:
        vol = new_volume((128, 128, 128), (-0.5, -0.5, -0.5), 0.008)
        vol.values[:] = rng.uniform(-1, 1, vol.dims)
        pts = vol.origin + rng.uniform(0, 127, size=(700_000, 3)) * vol.voxel_size

        pair(
            "trilinear footprints",
            lambda: trilinear.footprints_numba(pts, vol.origin, vol.voxel_size, vol.dims),
            lambda: trilinear.footprints_numpy(pts, vol.origin, vol.voxel_size, vol.dims),
            "700k samples",
        )
        idx, w = trilinear.footprints(pts, vol.origin, vol.voxel_size, vol.dims)
        flat = vol.values.ravel()
        pair(
            "trilinear gather",
            lambda: trilinear.gather_numba(flat, idx, w),
            lambda: trilinear.gather_numpy(flat, idx, w),
            "700k samples",
        )
        vals = rng.uniform(-1, 1, len(pts))
        ones = np.ones(len(pts))
        num = np.zeros(vol.values.size)
        den = np.zeros(vol.values.size)

        def scatter_numba():
            num[:] = 0
            den[:] = 0
            trilinear.scatter_accumulate_numba(num, den, idx, w, vals, ones)

        def scatter_numpy():
            num[:] = 0
            den[:] = 0
            trilinear.scatter_accumulate_numpy(num, den, idx, w, vals, ones)

        pair("trilinear scatter-accumulate", scatter_numba, scatter_numpy, "700k splats")

        mesh = make_icosphere(0.2, 4)
        intr = CameraIntrinsics(300.0, 300.0, 160.0, 120.0, 320, 240)
        pose = Pose(np.eye(3), np.array([0.0, 0.0, -0.8]))
        v_cam = (mesh.vertices - pose.translation) @ pose.rotation
        tri = v_cam[mesh.faces]
        from rayfuse.kernels import raycast

        pair(
            "depth render (5k tris, 320x240)",
            lambda: raycast.render_numba(tri, 300.0, 300.0, 160.0, 120.0, 320, 240),
            lambda: raycast.render_numpy(tri, 300.0, 300.0, 160.0, 120.0, 320, 240),
            f"{mesh.n_triangles} triangles",
        )
    else:
        print("numba inactive; per-kernel comparison needs the numba backend\n")

    print("\nend-to-end learned fuse_frame (320x240, S=9, 128^3):")
    intr = CameraIntrinsics(300.0, 300.0, 160.0, 120.0, 320, 240)
    routing = random_weights("routing", seed=1)
    fusion = random_weights("fusion", s=9, seed=2)
    vol = new_volume((128, 128, 128), (-0.512, -0.512, 0.3), 0.008)
    depth = rng.uniform(0.6, 1.1, (240, 320)).astype(np.float32)
    frame = [1]

    def one_frame():
        stats = fuse_frame(
            vol, depth, intr, Pose.identity(), routing, fusion, c_thr=0.0, frame_index=frame[0]
        )
        frame[0] += 1
        return stats

    t = best_of(one_frame, n=7)
    print(f"  {backend_name():6s}: {t * 1000:.0f} ms/frame")

    print("\nbaseline standard fusion (320x240, trunc 4, 128^3):")
    from rayfuse.baseline import integrate_frame_standard
    from rayfuse.geometry import DepthFrame

    t = best_of(lambda: integrate_frame_standard(vol, DepthFrame(depth, intr, Pose.identity())))
    print(f"  {backend_name():6s}: {t * 1000:.0f} ms/frame")


if __name__ == "__main__":
    main()
