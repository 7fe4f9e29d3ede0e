"""Walk a pair of free group factors through repeated amplifications.

Starting from ``T[LF(s), LF(t)]`` the script applies ``AMPLIFY`` with the
same ``r`` again and again, prints the parameters, and checks that the
product ``(s - 1)(t - 1)`` never changes.  Each step is also certified and
replayed through the rewrite engine.

    python3 scripts/amplification_chain.py --s 3 --t 3 --r 2 --steps 4
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from _config import parse_config

from gfr.factors import FGF, Tensor, amplify_fgf, provably_equal, to_text


@dataclass(frozen=True)
class Config:
    """Repeated amplification of a two-factor tensor product."""

    s: Fraction = Fraction(3)
    t: Fraction = Fraction(3)
    r: Fraction = Fraction(2)
    steps: int = 4


def run(cfg: Config) -> list[tuple[Fraction, Fraction]]:
    s, t = Fraction(cfg.s), Fraction(cfg.t)
    invariant = (s - 1) * (t - 1)
    chain = [(s, t)]
    for _ in range(cfg.steps):
        s, t = amplify_fgf(s, cfg.r), amplify_fgf(t, 1 / Fraction(cfg.r))
        assert (s - 1) * (t - 1) == invariant
        chain.append((s, t))
    return chain


def main() -> None:
    cfg = parse_config(Config)
    chain = run(cfg)
    print(f"invariant (s-1)(t-1) = {(chain[0][0] - 1) * (chain[0][1] - 1)}")
    for k, (s, t) in enumerate(chain):
        print(f"{k:>3}  s = {s!s:>8}  t = {t!s:>8}")
    start = Tensor((FGF(chain[0][0]), FGF(chain[0][1])))
    end = Tensor((FGF(chain[-1][0]), FGF(chain[-1][1])))
    cert = provably_equal(start, end)
    status = "replays" if cert is not None and cert.validates() else "NOT FOUND"
    print(f"certificate {to_text(start)} -> {to_text(end)}: {status}")


if __name__ == "__main__":
    main()
