"""Figure rendering for the CLI report paths.

Each helper takes already-computed arrays and writes one PNG next to the
delimited output.  Figures are a convenience view; the CSV/JSON files remain
the authoritative, byte-reproducible record.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_VERDICT_COLORS = {"AGREE": "tab:green", "DISAGREE": "tab:red", "UNTESTED": "tab:gray"}


def render_cf_figure(path, omegas, analytic, mc, std_err):
    fig, (ax_re, ax_im) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
    analytic = np.asarray(analytic)
    mc = np.asarray(mc)
    ax_re.plot(omegas, analytic.real, "-", label="series")
    ax_re.errorbar(omegas, mc.real, yerr=3 * np.asarray(std_err), fmt=".", ms=4, label="MC (3 s.e.)")
    ax_re.set_ylabel("Re M")
    ax_re.legend()
    ax_im.plot(omegas, analytic.imag, "-")
    ax_im.errorbar(omegas, mc.imag, yerr=3 * np.asarray(std_err), fmt=".", ms=4)
    ax_im.set_ylabel("Im M")
    ax_im.set_xlabel(r"$\omega$")
    fig.suptitle("characteristic function")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_pdf_figure(path, ys, density):
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ys, density, "-")
    ax.set_xlabel("y")
    ax.set_ylabel("f(y)")
    ax.set_title("transformed-variable density")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_moments_figure(path, ms, bessel, chebyshev, mc, std_err):
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ms, bessel, "o-", label="Bessel route")
    ax.plot(ms, chebyshev, "s--", label="Chebyshev route")
    ax.errorbar(ms, mc, yerr=3 * np.asarray(std_err), fmt="x", capsize=3, label="MC (3 s.e.)")
    ax.set_xlabel("moment order m")
    ax.set_ylabel(r"$\langle x^m \rangle$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_fringe_figure(path, phis, intensity, visibility):
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(phis, intensity, "-")
    ax.set_xlabel(r"$\varphi$")
    ax.set_ylabel("mean intensity")
    ax.set_title(f"fringe pattern, visibility = {visibility:.4f}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_phasor_figure(path, draws):
    draws = np.asarray(draws)
    show = draws[: min(len(draws), 4000)]
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    ax.plot(show.real, show.imag, ".", ms=2, alpha=0.4)
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.set_title("phasor-sum draws")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_wavefront_figure(path, grid, before, after):
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(grid, np.abs(before), "-", label=r"$|\Psi(t_1)|$")
    ax.plot(grid, np.abs(after), "-", label=r"$|\Psi(t_2)|$")
    ax.set_xlabel("angle")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report_figure(path, quantities, paper_sigmas, analytic_sigmas, verdicts):
    n = len(quantities)
    fig, ax = plt.subplots(figsize=(8, max(3, 0.32 * n + 1.2)))
    ypos = np.arange(n)
    colors = [_VERDICT_COLORS.get(v, "tab:gray") for v in verdicts]
    ax.barh(ypos - 0.18, paper_sigmas, height=0.36, color=colors, label="|printed - MC| / s.e.")
    ax.barh(ypos + 0.18, analytic_sigmas, height=0.36, color="tab:blue", alpha=0.5,
            label="|analytic - MC| / s.e.")
    ax.axvline(3.0, color="k", ls=":", lw=1)
    ax.set_yticks(ypos)
    ax.set_yticklabels(quantities, fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("symlog")
    ax.set_xlabel("deviation in standard errors (3 s.e. threshold dotted)")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
