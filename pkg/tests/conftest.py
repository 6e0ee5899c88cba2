"""Shared test configuration.

Property tests run under a profile without a deadline: the exact-arithmetic
checks have very uneven per-example cost (the first example at a new table
size pays for the whole prefix), which makes wall-clock deadlines flaky.
"""

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")
