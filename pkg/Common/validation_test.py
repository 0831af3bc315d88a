# pylint: skip-file
import os
from typing import Dict, List

import pytest

from Common.geo_types import Answer
from Common.result import Result, ok
from Common.validation import (
    INVARIANT_CHECKING_VAR,
    TYPE_CHECKING_VAR,
    disable_validation,
    invariant_checking_enabled,
    validate_types,
)
from Common.vertex_set import VertexSet


@validate_types
def f_int(a: int) -> Result[None]:
    print(a)
    return ok(None)


def test_disabled() -> None:
    if TYPE_CHECKING_VAR in os.environ:
        del os.environ[TYPE_CHECKING_VAR]
    assert f_int(2).assert_value() == None
    assert f_int("3").assert_value() == None  # type: ignore


def test_simple_enabled() -> None:
    os.environ[TYPE_CHECKING_VAR] = "True"
    assert f_int(2).assert_value() == None
    r = f_int("3")  # type: ignore
    assert r.is_error()
    assert r.error() == 'type of argument "a" must be int; got str instead'


@validate_types
def f_literal(answer: Answer) -> Result[None]:
    return ok(None)


def test_literal() -> None:
    os.environ[TYPE_CHECKING_VAR] = "True"
    assert f_literal("UNKNOWN").assert_value() == None
    r = f_literal("MAYBE")  # type: ignore
    assert r.is_error()
    assert (
        r.error()
        == """the value of argument "answer" must be one of ('YES', 'NO', 'UNKNOWN'); got MAYBE instead"""
    )


@validate_types
def f_complex(my_list: List[VertexSet], my_dict: Dict[str, List[VertexSet]]) -> Result[int]:
    return ok(len(my_list) + sum([len(x) for x in my_dict.values()]))


def test_complex() -> None:
    os.environ[TYPE_CHECKING_VAR] = "True"
    assert f_complex([VertexSet(), VertexSet(3)], {}).assert_value() == 2
    r = f_complex([VertexSet(), 3], {})  # type: ignore
    assert r.is_error()
    assert 'argument "my_list"[1]' in r.error()

    assert f_complex([VertexSet()], {"a": [VertexSet(1), VertexSet(2)]}).assert_value() == 3
    r = f_complex([VertexSet()], {"a": [VertexSet(1), [2]]})  # type: ignore
    assert r.is_error()
    assert "argument \"my_dict\"['a'][1]" in r.error()


@validate_types
def f_no_result(a: int) -> int:
    return a


def test_non_result_raises() -> None:
    os.environ[TYPE_CHECKING_VAR] = "True"
    assert f_no_result(4) == 4
    with pytest.raises(TypeError):
        f_no_result("4")  # type: ignore


@validate_types
def f_forwardref(a: "List[str]") -> None:
    return None


def test_resolve_forward_ref() -> None:
    os.environ[TYPE_CHECKING_VAR] = "True"
    f_forwardref(["a", "b"])
    with pytest.raises(TypeError):
        f_forwardref(["a", "b", 3])  # type: ignore


@disable_validation
def call_unchecked() -> int:
    return f_no_result("5")  # type: ignore


def test_disable_validation() -> None:
    os.environ[TYPE_CHECKING_VAR] = "True"
    assert call_unchecked() == "5"
    assert TYPE_CHECKING_VAR in os.environ


def test_invariant_checking_switch() -> None:
    was_set = os.environ.pop(INVARIANT_CHECKING_VAR, None)
    try:
        assert not invariant_checking_enabled()
        os.environ[INVARIANT_CHECKING_VAR] = "True"
        assert invariant_checking_enabled()
    finally:
        os.environ.pop(INVARIANT_CHECKING_VAR, None)
        if was_set is not None:
            os.environ[INVARIANT_CHECKING_VAR] = was_set
