"""Exact duality toolkit for line-sum measures on the unit square.

Values cross the boundary as JSON strings and exact "p/q" rational strings;
nothing is ever rounded through floating point.
"""

try:
    from linfinf import _core
except ImportError:  # build-tree layout: the extension sits directly on sys.path
    import _core

coordinate_germ = _core.coordinate_germ
germ_norm = _core.germ_norm
pairing = _core.pairing
l1_norm = _core.l1_norm
norm_witness = _core.norm_witness
measure_of = _core.measure_of
sigma_finite = _core.sigma_finite
restrict_germ = _core.restrict_germ
represents = _core.represents
field_member = _core.field_member
patch_global = _core.patch_global
measurable_witness = _core.measurable_witness
demo_dual_pairing = _core.demo_dual_pairing
demo_norm_attainment = _core.demo_norm_attainment
demo_ds_remark = _core.demo_ds_remark
run_axioms = _core.run_axioms

__all__ = [
    "coordinate_germ",
    "germ_norm",
    "pairing",
    "l1_norm",
    "norm_witness",
    "measure_of",
    "sigma_finite",
    "restrict_germ",
    "represents",
    "field_member",
    "patch_global",
    "measurable_witness",
    "demo_dual_pairing",
    "demo_norm_attainment",
    "demo_ds_remark",
    "run_axioms",
]
