from fractions import Fraction as F

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from families import FIGURE_5, FIGURE_6, NO_TRANSVERSAL
from stabline.estimator import TransversalRegressor, check_abscissas, check_segments
from stabline.exceptions import DuplicateAbscissa, NoTransversalError


@pytest.mark.parametrize("selector, line", [
    ("s1", (F(5, 12), F(49, 12))),
    ("s2", (F(13, 30), F(137, 30))),
    ("s3", (F(5, 12), F(107, 24))),
])
def test_fit_selects_line(selector, line):
    reg = TransversalRegressor(selector=selector).fit(FIGURE_5)
    assert (reg.coef_, reg.intercept_) == line
    assert reg.classification_ == "infinite"
    assert reg.area_ == 2
    assert reg.r_ == (1, 1)


def test_params_and_clone():
    reg = TransversalRegressor(selector="s2")
    assert reg.get_params() == {"selector": "s2"}
    other = clone(reg).set_params(selector="s1")
    assert other.selector == "s1" and reg.selector == "s2"


def test_numpy_input_and_predict():
    reg = TransversalRegressor("s1").fit(np.array(FIGURE_6))
    pred = reg.predict([0, 30])
    assert pred.dtype == object
    assert list(pred) == [F(76, 15), F(7, 30) * 30 + F(76, 15)]
    assert reg.predict(np.array([[1], [2]])).shape == (2,)


def test_score_and_transform():
    reg = TransversalRegressor().fit(FIGURE_5)
    assert reg.score(FIGURE_5) == 1
    assert reg.score(NO_TRANSVERSAL) < 1
    assert all(v == 0 for v in reg.transform(FIGURE_5))
    gaps = reg.transform([(0, 100, 101), (1, -50, -40)])
    assert gaps[0] < 0 < gaps[1]


def test_no_transversal():
    reg = TransversalRegressor().fit(NO_TRANSVERSAL)
    assert reg.classification_ == "none" and reg.line_ is None
    with pytest.raises(NoTransversalError):
        reg.predict([1])


def test_not_fitted_and_bad_params():
    with pytest.raises(NotFittedError):
        TransversalRegressor().predict([1])
    with pytest.raises(ValueError):
        TransversalRegressor(selector="s9").fit(FIGURE_5)


def test_validation_helpers():
    with pytest.raises(ValueError):
        check_segments([(1, 2)])
    with pytest.raises(DuplicateAbscissa):
        check_segments([(1, 0, 1), (1, 0, 2)])
    assert check_segments([("1/2", "0", "1"), (1, 0, 1)])[0].x == F(1, 2)
    assert check_abscissas(3) == [3]
    with pytest.raises(ValueError):
        check_abscissas(np.zeros((2, 2)))
