"""End-to-end experiment grid at reduced training budgets.

Runs the full staged pipeline — dataset generation, world-model training,
adapter finetuning, IDM training, synthetic rollouts, pseudo-labeling,
the three policy conditions (Real / Real+Syn / Real+Syn-10x), and
evaluation — for the 5-demo regime with small step counts so it finishes
in a few minutes. The dataset counts (60 demos / 40 test, 56 single and
560 multi rollouts) match the real protocol; only the training budgets
are reduced. Artifacts, CSV, and SVG charts land in demos/out/pipeline/.

For a faithful run, use the CLI with the default config instead:
    python3 -m handoverlab.cli grid --out runs/full
"""

import json
import os

from handoverlab import pipeline as pl

OUT = os.path.join(os.path.dirname(__file__), "out", "pipeline")


def main():
    cfg = pl.ExperimentConfig(
        master_seed=0,
        regimes=(5,),
        rollout_horizon=16,
        codec_steps=200, wm_base_steps=150, wm_adapter_steps=100,
        idm_steps=150, idm_pretrain_steps=50, label_samples=2,
        policy_pretrain_steps=100, policy_real_steps=60,
        ode_steps=4, success_rollouts=2,
    )
    pl.self_check(cfg)
    report = pl.run_grid(cfg, OUT)

    print("\n== trajectory MSE (mean over 40 held-out episodes) ==")
    for row in report.rows:
        means = {k: round(v, 3) for k, v in row.report.mean.items()}
        print(f"  regime {row.regime:2d}  {row.condition:12s} {means}")
    print("\n== Frechet feature distance (base vs finetuned rollouts) ==")
    print(json.dumps(report.frechet, indent=2))
    print("\n== closed-loop success rates ==")
    print(json.dumps(report.success, indent=2))
    print(f"\nreport files in {os.path.join(OUT, 'report')}")
    print("note: at these tiny budgets the numbers are meaningless; the "
          "demo shows the plumbing, the default config shows the effect.")


if __name__ == "__main__":
    main()
