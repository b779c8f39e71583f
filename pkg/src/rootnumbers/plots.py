"""Figure rendering for the report path.

Everything draws through the Agg backend into PNG files with metadata
stripped, so a fixed configuration produces identical bytes on every run.
"""

import cmath
from collections import Counter

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .characters import MultiplicativeCharacter
from .orbits import sl2_orbit_table
from .tripleproduct import TripleProductSpec, global_root_number

SIGN_PATTERNS = tuple((s1, s2, s3) for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1))


def _save(fig, path):
    fig.savefig(path, dpi=150, metadata={"Software": None})
    plt.close(fig)
    return path


def _pattern_label(signs):
    return "".join("+" if s > 0 else "-" for s in signs)


def save_root_number_grid(path, primes=(11, 17, 19, 23)):
    """Sign of W for every eigenvalue-sign pattern, twisted and untwisted.

    Rows are the eight sign patterns of (a_p(f), a_p(g), a_p(h)); the twisted
    panel is constantly -1 while the untwisted one follows the sign product.
    """
    data = {}
    for twisted in (False, True):
        grid = np.zeros((len(SIGN_PATTERNS), len(primes)))
        for i, signs in enumerate(SIGN_PATTERNS):
            for j, p in enumerate(primes):
                spec = TripleProductSpec(p=p, signs=signs, twisted=twisted)
                grid[i, j] = global_root_number(spec).w_global
        data[twisted] = grid
    fig, axes = plt.subplots(1, 2, figsize=(7.2, 4.2), sharey=True)
    for ax, twisted in zip(axes, (False, True)):
        grid = data[twisted]
        ax.imshow(grid, cmap="RdBu", vmin=-1.6, vmax=1.6, aspect="auto")
        for i in range(grid.shape[0]):
            for j in range(grid.shape[1]):
                ax.text(j, i, "+1" if grid[i, j] > 0 else "-1",
                        ha="center", va="center", fontsize=9)
        ax.set_xticks(range(len(primes)), [str(p) for p in primes])
        ax.set_xlabel("level p")
        ax.set_title("twisted" if twisted else "untwisted")
    axes[0].set_yticks(range(len(SIGN_PATTERNS)),
                       [_pattern_label(s) for s in SIGN_PATTERNS])
    axes[0].set_ylabel("signs of (a_p(f), a_p(g), a_p(h))")
    fig.suptitle("global root number of the triple product")
    fig.tight_layout()
    return _save(fig, path)


def save_gauss_walk(path, q, exponent=1):
    """Partial sums of the Gauss sum for the character of given exponent.

    The walk starts at 0, adds chi(x) e^{2 pi i x / q} for x = 1..q-1, and
    must end on the circle of radius sqrt(q) when chi is nontrivial.
    """
    chi = MultiplicativeCharacter(q, exponent)
    pts = [0 + 0j]
    for x in range(1, q):
        term = chi(x).embed() * cmath.exp(2j * cmath.pi * x / q)
        pts.append(pts[-1] + term)
    xs = [z.real for z in pts]
    ys = [z.imag for z in pts]
    fig, ax = plt.subplots(figsize=(5.4, 5.4))
    ax.plot(xs, ys, "-o", markersize=3, linewidth=1)
    ax.plot(xs[-1], ys[-1], "s", color="crimson", label="G(chi)")
    circle = plt.Circle((0, 0), q ** 0.5, fill=False, linestyle=":", color="gray")
    ax.add_patch(circle)
    ax.axhline(0, color="gray", linewidth=0.5)
    ax.axvline(0, color="gray", linewidth=0.5)
    ax.set_aspect("equal")
    ax.set_title(f"Gauss sum walk, q={q}, character order {chi.order}")
    ax.legend(loc="lower right")
    fig.tight_layout()
    return _save(fig, path)


def save_orbit_sizes(path, p):
    """Histogram of orbit sizes for the matrix action on marking triples."""
    table = sl2_orbit_table(p)
    nondeg = [s for s, d in zip(table.sizes, table.degenerate) if not d]
    deg = [s for s, d in zip(table.sizes, table.degenerate) if d]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label, sizes, color in (("nondegenerate", nondeg, "#2166ac"),
                                ("degenerate", deg, "#b2182b")):
        if not sizes:
            continue
        counts = Counter(sizes)
        xs = sorted(counts)
        ax.bar([f"{x}\n{label[:6]}" for x in xs], [counts[x] for x in xs],
               color=color, label=label)
    ax.set_xlabel("orbit size")
    ax.set_ylabel("number of orbits")
    ax.set_title(f"orbit sizes, p={p}: {table.n_orbits()} orbits, "
                 f"{len(nondeg)} nondegenerate")
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def save_all(outdir, primes=(11, 17, 19, 23), gauss_q=23, orbit_p=7):
    """The default figure set for the report command; returns the paths."""
    produced = [
        save_root_number_grid(f"{outdir}/root_numbers.png", primes),
        save_gauss_walk(f"{outdir}/gauss_walk.png", gauss_q),
        save_orbit_sizes(f"{outdir}/orbit_sizes.png", orbit_p),
    ]
    return produced
