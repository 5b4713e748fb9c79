"""How the flow changes as beta walks through {0.1, 0.5, 2, 4, 10}.

beta is the linear damping on z, the only brake on the (x y)^2 forcing
term. Small beta lets z climb high before the quadratic term is checked;
large beta squashes z quickly. This script sweeps five values with sigma
and rho pinned at (12, 8) and prints one row per cell: the sampled z range,
the total x extent, and the largest Lyapunov exponent of the run.

Run:  python3 demos/04_beta_sweep.py   (about ten seconds)
"""

from mqlorenz import BenettinSettings, SimSettings, SystemParams, sweep_beta

base = SystemParams(sigma=12.0, rho=8.0, beta=4.0)
cfg = SimSettings(t_end=50.0, h=1e-3, discard=10.0, sample_every=10)
lyap = BenettinSettings(h=1e-3, transient=5.0, total_time=25.0, renorm_interval=0.5)

betas = [0.1, 0.5, 2.0, 4.0, 10.0]
print(f"sweeping beta over {betas} at (sigma, rho) = ({base.sigma:g}, {base.rho:g})")
print(f"trajectory window t in [{cfg.discard:g}, {cfg.t_end:g}], "
      f"exponent averaged over {lyap.total_time:g} time units")
print()

rep = sweep_beta(base, betas, cfg, lyap)
print(f"{'beta':>6}  {'z_min':>10}  {'z_max':>10}  {'x extent':>10}  "
      f"{'lambda_1':>10}  {'bounded':>7}")
for c in rep.cells:
    if c.error is not None:
        print(f"{c.beta:6.1f}  failed: {c.error}")
        continue
    print(f"{c.beta:6.1f}  {c.z_min:10.4f}  {c.z_max:10.4f}  {c.x_extent:10.4f}  "
          f"{c.largest_lyapunov:10.4f}  {str(c.bounded):>7}")

print()
print("what to look for: every cell stays bounded, but the envelopes are")
print("wildly different. beta = 4 lets z spike past 45 while beta = 0.5")
print("caps it near 15, and at beta = 10 the damping is so heavy the orbit")
print("has already parked on the rest line {(0, y, 0)} before the sampling")
print("window opens, hence the all-zero row. The positive exponents are")
print("finite-window readings taken inside the chaotic transient; averaged")
print("for long enough (demo 03) the exponent sinks toward zero as the")
print("orbit settles onto the line.")
