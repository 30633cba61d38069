import numpy as np
from scipy import stats


def clopper_pearson(failures, trials, alpha=0.05):
    """Exact two-sided confidence interval for a binomial rate."""
    if trials == 0:
        return 0.0, 1.0
    low = stats.beta.ppf(alpha / 2, failures, trials - failures + 1) if failures > 0 else 0.0
    high = stats.beta.ppf(1 - alpha / 2, failures + 1, trials - failures) if failures < trials else 1.0
    return float(low), float(high)


def loglog_slope(p_low, rate_low, p_high, rate_high):
    """Slope of log(rate) against log(p); None when a rate is zero."""
    if rate_low <= 0 or rate_high <= 0:
        return None
    return float((np.log(rate_high) - np.log(rate_low)) / (np.log(p_high) - np.log(p_low)))
