import os

from hypothesis import HealthCheck, settings

from grasschub import GrContext

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

GR24 = GrContext(2, 4)
GR25 = GrContext(2, 5)
GR35 = GrContext(3, 5)
GR36 = GrContext(3, 6)
GR26 = GrContext(2, 6)


def basis_pairs(ctx, include_unit=True):
    basis = [p for p in ctx.basis() if include_unit or p]
    for i, a in enumerate(basis):
        for b in basis[i:]:
            yield a, b
