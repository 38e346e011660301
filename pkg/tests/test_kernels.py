"""The compiled extension and the numpy fallback must agree exactly,
including which witness they pick when several exist."""

import os
import subprocess
import sys

import numpy as np
import pytest

from starbench.kernels import BACKEND, pure
from starbench.kernels import _speed as compiled

from conftest import cached_ring

KERNEL_FNS = [
    "first_assoc_violation",
    "first_distrib_violation",
    "first_antimult_violation",
    "semi_proper_witness",
]


def tables(text):
    r = cached_ring(text)
    add = np.ascontiguousarray(r.add_table(), dtype=np.int32)
    mul = np.ascontiguousarray(r.mul_table(), dtype=np.int32)
    star = np.ascontiguousarray(r.star_vector(), dtype=np.int32)
    return add, mul, star


CORPUS = ["Z(1)", "Z(6)", "Z(8)", "M(2,Z(2))", "M(2,Z(3))", "prod(Z(2),Z(3))", "sub(Z(9); 3)"]


class TestAgreementOnCleanRings:
    @pytest.mark.parametrize("text", CORPUS)
    def test_no_violations_reported(self, text):
        add, mul, star = tables(text)
        for impl in (pure, compiled):
            assert impl.first_assoc_violation(add) is None
            assert impl.first_assoc_violation(mul) is None
            assert impl.first_distrib_violation(add, mul) is None
            assert impl.first_antimult_violation(mul, star) is None

    @pytest.mark.parametrize("text", CORPUS)
    def test_semi_proper_witness_agrees(self, text):
        add, mul, star = tables(text)
        assert pure.semi_proper_witness(mul, star) == compiled.semi_proper_witness(
            mul, star
        )

    def test_zero_multiplication_ring_gives_first_nonzero(self):
        add, mul, star = tables("sub(Z(9); 3)")
        assert pure.semi_proper_witness(mul, star) == 1
        assert compiled.semi_proper_witness(mul, star) == 1


class TestAgreementOnInjectedViolations:
    """Corrupt tables in controlled spots; both backends must return the
    same (first) witness."""

    def test_assoc_witness_identical(self):
        add, mul, star = tables("Z(6)")
        bad = np.array(mul, copy=True)
        bad[4, 5] = 1
        bad[5, 1] = 3
        w1 = pure.first_assoc_violation(bad)
        w2 = compiled.first_assoc_violation(bad)
        assert w1 == w2
        assert w1 is not None

    def test_distrib_witness_identical_including_side(self):
        add, mul, star = tables("Z(6)")
        bad = np.array(mul, copy=True)
        bad[3, 4] = 5
        w1 = pure.first_distrib_violation(add, bad)
        w2 = compiled.first_distrib_violation(add, bad)
        assert w1 == w2
        assert w1[0] in (0, 1)

    def test_antimult_witness_identical(self):
        add, mul, star = tables("M(2,Z(2))")
        bad_star = np.array(star, copy=True)
        # swap two non-symmetric elements to desynchronize the transpose
        r = cached_ring("M(2,Z(2))")
        e12 = r.encode(((0, 1), (0, 0)))
        e21 = r.encode(((0, 0), (1, 0)))
        bad_star[e12], bad_star[e21] = e12, e21
        w1 = pure.first_antimult_violation(mul, bad_star)
        w2 = compiled.first_antimult_violation(mul, bad_star)
        assert w1 == w2
        assert w1 is not None

    def test_random_corruptions_agree(self):
        rng = np.random.default_rng(2024)
        add, mul, star = tables("M(2,Z(2))")
        for _ in range(25):
            bad_mul = np.array(mul, copy=True)
            k = int(rng.integers(1, 4))
            for _ in range(k):
                i, j, v = rng.integers(0, 16, size=3)
                bad_mul[i, j] = v
            assert pure.first_assoc_violation(bad_mul) == compiled.first_assoc_violation(
                bad_mul
            )
            assert pure.first_distrib_violation(add, bad_mul) == (
                compiled.first_distrib_violation(add, bad_mul)
            )
            assert pure.first_antimult_violation(bad_mul, star) == (
                compiled.first_antimult_violation(bad_mul, star)
            )
            assert pure.semi_proper_witness(bad_mul, star) == (
                compiled.semi_proper_witness(bad_mul, star)
            )


class TestSelection:
    def test_this_session_runs_compiled(self):
        # the extension is built in CI and in the dev install; if this
        # fails the install is broken, not the selection logic
        assert BACKEND == "compiled"

    def test_read_only_tables_accepted(self, z6):
        add = z6.add_table()
        assert not add.flags.writeable
        assert compiled.first_assoc_violation(add) is None

    @pytest.mark.parametrize("choice,expected", [("pure", "pure"), ("compiled", "compiled"), ("", "compiled")])
    def test_env_override(self, choice, expected):
        code = (
            "from starbench.kernels import BACKEND; print(BACKEND)"
        )
        env = dict(os.environ, STARBENCH_KERNELS=choice)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == expected

    def test_pure_mode_passes_validation(self):
        code = (
            "import starbench as sb\n"
            "from starbench.kernels import BACKEND\n"
            "assert BACKEND == 'pure'\n"
            "rep = sb.validate_star_ring(sb.build_ring(sb.parse_ring_expr('M(2,Z(3))')))\n"
            "print(rep['ok'])\n"
        )
        env = dict(os.environ, STARBENCH_KERNELS="pure")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == "True"
