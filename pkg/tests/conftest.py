from hypothesis import HealthCheck, settings

settings.register_profile(
    "crosscov",
    deadline=None,
    max_examples=50,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("crosscov")
