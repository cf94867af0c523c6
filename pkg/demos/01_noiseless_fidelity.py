"""
Teleportation fidelity of a noiseless resource state
====================================================

A two-qubit resource state cos(phi)|00> + e^{i varphi} sin(phi)|11>
powers standard teleportation. Without any noise, the maximal average
fidelity depends only on the entanglement E0 = sin(2 phi) and the
relative phase varphi.
"""

import numpy as np

from teleportality import ResourceParams, f_nonint, resource_state

# a maximally entangled resource teleports perfectly
bell = ResourceParams(np.pi / 4, 0.0)
print("Bell resource:", resource_state(bell).round(6))
print("fidelity     :", f_nonint(bell))

# a product state only reaches the classical bound 2/3
product = ResourceParams(0.0, 0.0)
print("product state fidelity:", f_nonint(product))

# sweep the (phi, varphi) plane: the fidelity is
# 2/3 + E0 |cos(varphi)| / 3, so the phase can erase the quantum
# advantage even at maximal entanglement
phis = np.linspace(0, np.pi / 2, 101)
varphis = np.linspace(-np.pi / 2, 3 * np.pi / 2, 201)
surface = np.array(
    [[f_nonint(ResourceParams(float(ph), float(vp))) for vp in varphis] for ph in phis]
)
print("surface min/max:", surface.min(), surface.max())
print("fidelity at phi=pi/4, varphi=pi/2:", surface[50, 100])

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

fig, ax = plt.subplots(figsize=(6, 4))
im = ax.pcolormesh(varphis / np.pi, phis / np.pi, surface, shading="auto")
ax.set_xlabel(r"$\varphi / \pi$")
ax.set_ylabel(r"$\phi / \pi$")
ax.set_title("maximal average fidelity, no noise")
fig.colorbar(im, ax=ax, label=r"$F_{\max}$")
fig.tight_layout()
fig.savefig("noiseless_fidelity.png", dpi=120)
print("wrote noiseless_fidelity.png")
