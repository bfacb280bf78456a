#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .geometry import (
    TWO_PI,
    Torus,
    SurfacePoint,
    wrap_angle,
    angular_distance,
    embed,
    cylinder_point,
    implicit_residual,
    first_fundamental_form,
    christoffels,
    christoffels_printed,
    christoffels_numeric,
)
from .geodesic import (
    GeodesicState,
    StateDerivative,
    Trajectory,
    TrajectorySample,
    geodesic_rhs,
    conserved_quantities,
    integrate_geodesic,
    GeodesicBatch,
    integrate_geodesic_batch,
    random_geodesic_states,
)
from .winding import (
    WindingLine,
    ClosurePeriod,
    winding_point,
    closure_period,
    wrap_map,
    wrap_turns,
    sample_winding,
    lattice_samples,
    density_coverage,
)

__all__ = [
    'TWO_PI',
    'Torus',
    'SurfacePoint',
    'wrap_angle',
    'angular_distance',
    'embed',
    'cylinder_point',
    'implicit_residual',
    'first_fundamental_form',
    'christoffels',
    'christoffels_printed',
    'christoffels_numeric',
    'GeodesicState',
    'StateDerivative',
    'Trajectory',
    'TrajectorySample',
    'geodesic_rhs',
    'conserved_quantities',
    'integrate_geodesic',
    'GeodesicBatch',
    'integrate_geodesic_batch',
    'random_geodesic_states',
    'WindingLine',
    'ClosurePeriod',
    'winding_point',
    'closure_period',
    'wrap_map',
    'wrap_turns',
    'sample_winding',
    'lattice_samples',
    'density_coverage',
]
