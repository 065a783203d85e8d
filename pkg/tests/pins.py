"""Frozen oracle constants. Regenerate with scripts/pin_oracles.py.

The deep-run values come from an independent straightforward chaos-game
implementation (numpy PCG64 selection, n = 1e7), so they do not depend on
the package's rendering path.
"""

# Reference splitmix64 outputs from the public-domain C implementation
# (compiled with cc -O2); six outputs per seed.
SPLITMIX64_VECTORS = {
    0: (16294208416658607535, 7960286522194355700, 487617019471545679,
        17909611376780542444, 1961750202426094747, 6038094601263162090),
    42: (13679457532755275413, 2949826092126892291, 5139283748462763858,
         6349198060258255764, 701532786141963250, 16015981125662989062),
    2 ** 64 - 1: (16490336266968443936, 16834447057089888969,
                  4048727598324417001, 7862637804313477842,
                  13015481187462834606, 15212506146343009075),
}

# (xmin, ymin, xmax, ymax) of the deep renderings.
FLOWER_DEEP_BOX = (-2.2403162411422946, 2.1139737504143854,
                   2.3011384411790585, 3.927308469459366)
MAPLE_DEEP_BOX = (-3.2927563094902443, -3.171226652665041,
                  3.3406902185583576, 5.072461745775541)
SIERPINSKI_DEEP_BOX = (5.751992742755001e-12, 2.7074846412308587e-12,
                       0.9998480566648602, 0.9999700190410863)

# Minimal-simplex legs of the deep renderings (right angle at the box corner).
SIERPINSKI_DEEP_SIMPLEX_LEG = 0.9999999999897259
FLOWER_DEEP_SIMPLEX_LEG = 5.400598557446231

# Hausdorff distance from the engine's n=2e5, seed=42 rendering to the deep
# rendering. 3x this bounds the rendering's self-map defect, because
# d(W(S), S) <= (1 + s) * d(S, A) whenever W(A) = A with contractivity s < 1.
FLOWER_DIST_TO_DEEP_2E5 = 0.0011308415542198797
MAPLE_DIST_TO_DEEP_2E5 = 0.10868295269444693

# Golden minimal-simplex basis for maple, pinned from the implementation at
# n=1e6, seed=42 (n=1e5 vs 1e6 legs agree within 0.5%).
MAPLE_GOLDEN_SIMPLEX = ((-3.281352556474126, -3.1706485780531963),
                        (9.2488194145769, -3.1706485780531963),
                        (-3.281352556474126, 9.35952339299783))
