import os

from hypothesis import HealthCheck, Verbosity, settings

# SNF reductions and K-theory truncations have no useful per-example deadline
settings.register_profile('ci', max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('dev', max_examples=100, deadline=None)
settings.register_profile('debug', max_examples=10, verbosity=Verbosity.verbose, report_multiple_bugs=False)

settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'dev'))
