try:
    from ._rvertex import (
        bethe_f,
        domain_wall_det,
        domain_wall_det_homogeneous,
        dual_symmetric_function,
        dual_wavefunction,
        run_suite,
        symmetric_function,
        wavefunction,
    )
except ImportError:  # build-tree layout: extension lives next to the package
    from _rvertex import (
        bethe_f,
        domain_wall_det,
        domain_wall_det_homogeneous,
        dual_symmetric_function,
        dual_wavefunction,
        run_suite,
        symmetric_function,
        wavefunction,
    )

__all__ = [
    "bethe_f",
    "domain_wall_det",
    "domain_wall_det_homogeneous",
    "dual_symmetric_function",
    "dual_wavefunction",
    "run_suite",
    "symmetric_function",
    "wavefunction",
]
