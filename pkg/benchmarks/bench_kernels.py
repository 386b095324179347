"""Compare the compiled kernels with the numpy fallback.

Each backend is timed in its own interpreter (the backend is chosen at import),
then the two result sets are printed side by side:

    python3 benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import json
import os
import subprocess
import sys
import timeit


def workloads():
    import numpy as np

    from xairank import nn
    from xairank._kernels import col2im, im2col, maxpool2_backward, maxpool2_forward
    from xairank.data import generate_kernel
    from xairank.segmentation import quickshift

    rng = np.random.default_rng(0)
    x = rng.random((32, 64, 64, 8))
    cols = im2col(x, 3, 1)
    pooled, arg = maxpool2_forward(x)
    model = nn.merge_batchnorm(nn.build_micro_cnn(0))
    images = rng.random((32, 3, 64, 64))
    kernel = generate_kernel(1)
    return {
        "im2col 32x64x64x8": lambda: im2col(x, 3, 1),
        "col2im 32x64x64x8": lambda: col2im(cols, 64, 64, 8, 3, 1),
        "maxpool2 forward": lambda: maxpool2_forward(x),
        "maxpool2 backward": lambda: maxpool2_backward(pooled, arg, 64, 64),
        "micro-CNN forward, 32 images": lambda: model.logits(images),
        "input gradient, 1 image": lambda: nn.input_gradient(model, images[0], 1),
        "quickshift, 1 kernel": lambda: quickshift(kernel.image, kernel.mask),
    }


def measure(repeat):
    from xairank._kernels import BACKEND

    out = {}
    for name, fn in workloads().items():
        fn()  # warm-up
        out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
    return BACKEND, out


def run_backend(pure, repeat):
    env = dict(os.environ)
    env.pop("XAIRANK_PURE_PYTHON", None)
    if pure:
        env["XAIRANK_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=5, help="best of N runs")
    parser.add_argument("--json", action="store_true", help="print raw timings as JSON")
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.child:
        backend, timings = measure(args.repeat)
        print(json.dumps({"backend": backend, "timings": timings}))
        return 0

    compiled = run_backend(False, args.repeat)
    pure = run_backend(True, args.repeat)
    if args.json:
        print(json.dumps({"compiled": compiled, "python": pure}, indent=1))
        return 0
    if compiled["backend"] != "compiled":
        print("compiled extension not built; both columns use the numpy fallback")
    width = max(len(k) for k in pure["timings"])
    print(f"{'workload':<{width}}  {'compiled':>10}  {'python':>10}  {'speed-up':>8}")
    for name, t_py in pure["timings"].items():
        t_c = compiled["timings"][name]
        print(f"{name:<{width}}  {t_c * 1e3:>8.2f}ms  {t_py * 1e3:>8.2f}ms  {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
