from hypothesis import HealthCheck, settings

# keep property runs deterministic across machines and repeated invocations
settings.register_profile(
    "deterministic",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")
