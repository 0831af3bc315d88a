"""
Code used to do selective runtime validation. Two independent switches are read from the environment:

* 'IS_TYPE_CHECKING': functions decorated with @validate_types have their arguments and return values validated
  at runtime against their annotations via typeguard. Enabled in tests, disabled otherwise since every decorated
  call pays for it.
* 'IS_INVARIANT_CHECKING': the separation pipeline asserts the structural properties of every shadow-closed pair
  and every halfspace it builds (see Separation/invariants.py).

mypy covers most of what @validate_types checks, but graphs and vertex sets parsed from untrusted input files
reach the library through the harnesses, and there the runtime check is what catches a stray list or label.
"""
import functools
import os
from typing import Any, TypeVar, cast

from typeguard import typechecked  # type: ignore

from Common.result import Result, error

TYPE_CHECKING_VAR = "IS_TYPE_CHECKING"
INVARIANT_CHECKING_VAR = "IS_INVARIANT_CHECKING"

T = TypeVar("T")


def validate_types(func: T) -> T:
    """
    Validate that the given func is always called with inputs that match the type signatures and
    that it always returns values that match the type signature.

    Only enabled if 'IS_TYPE_CHECKING' is set in the environment.

    If the given function returns a Result, any type errors will be reported in an error result.
    Otherwise, a TypeError is raised.

    :param func:    The function to decorate
    :return:        The decorated version of the function
    """

    @functools.wraps(func)  # type: ignore
    def inner(*args: Any, **kwargs: Any) -> Any:
        if os.environ.get(TYPE_CHECKING_VAR):
            try:
                return typechecked(func)(*args, **kwargs)  # type: ignore
            except TypeError as exc:
                return_type = func.__annotations__.get("return", None)  # type: ignore
                if getattr(return_type, "__origin__", None) == Result:
                    return error(str(exc))
                raise exc
        return func(*args, **kwargs)  # type: ignore

    return cast(T, inner)


def invariant_checking_enabled() -> bool:
    """
    :return:    Whether 'IS_INVARIANT_CHECKING' is set in the environment
    """
    return bool(os.environ.get(INVARIANT_CHECKING_VAR))


def disable_validation(func: T) -> T:
    """
    Disable type validation when running the given function. Meant for the few places where @validate_types gets
    in the way, such as tests that patch stdout.

    :param func:    The function to decorate
    :return:        The decorated function
    """

    @functools.wraps(func)  # type: ignore
    def inner(*args: Any, **kwargs: Any) -> Any:
        was_set = False
        try:
            if TYPE_CHECKING_VAR in os.environ:
                was_set = True
                del os.environ[TYPE_CHECKING_VAR]
            return func(*args, **kwargs)  # type: ignore
        finally:
            if was_set:
                os.environ[TYPE_CHECKING_VAR] = "True"

    return cast(T, inner)
