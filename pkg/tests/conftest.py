import os

from hypothesis import HealthCheck, settings

from digiconvex import validate_input

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=int(os.environ.get("DIGICONVEX_HYPOTHESIS_EXAMPLES", "200")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def V(points, d=2):
    return validate_input(points, d)
