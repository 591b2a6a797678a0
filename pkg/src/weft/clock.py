"""Wall and virtual clocks.

The virtual clock drives both simulated message delays and cron triggers,
so a "daily" policy runs in microseconds of test time.
"""

import time
from datetime import datetime, timedelta


class WallClock:
    def now(self):
        return datetime.now()

    def sleep(self, seconds):
        time.sleep(seconds)


class VirtualClock:
    def __init__(self, start=None):
        self._now = start or datetime(2024, 1, 1, 12, 0, 0)

    def now(self):
        return self._now

    def advance(self, seconds):
        self._now += timedelta(seconds=seconds)

    def advance_to(self, when):
        if when < self._now:
            raise ValueError("virtual clock cannot run backwards")
        self._now = when

    def sleep(self, seconds):
        self.advance(seconds)
