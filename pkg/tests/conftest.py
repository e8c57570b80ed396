import numpy as np
import pytest


@pytest.fixture
def day_range():
    def make(n, start="2007-01-02"):
        return np.datetime64(start, "D") + np.arange(n)

    return make


def write_price_csv(path, dates, prices):
    lines = ["date,close"]
    for day, price in zip(dates, prices):
        lines.append(f"{day},{price}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)
