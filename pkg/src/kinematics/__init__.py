#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .fermat_curve import (
    CurveParam,
    KinematicsSample,
    PhaseClass,
    PhaseScanResult,
    curve_y,
    velocity,
    acceleration,
    kinematics_sample,
    finite_diff_oracle,
    velocity_slope,
    phase_class,
    phase_scan,
    sample_curve,
)

__all__ = [
    'CurveParam',
    'KinematicsSample',
    'PhaseClass',
    'PhaseScanResult',
    'curve_y',
    'velocity',
    'acceleration',
    'kinematics_sample',
    'finite_diff_oracle',
    'velocity_slope',
    'phase_class',
    'phase_scan',
    'sample_curve',
]
