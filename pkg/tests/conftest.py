from hypothesis import HealthCheck, settings

# The randomized invariant suites are specified to run at >= 1000 cases
# per property; disable the wall-clock deadline so CI load cannot flake them.
settings.register_profile(
    "invariants",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("invariants")
