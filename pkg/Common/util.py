"""
Holds a variety of small general purpose utility functions
"""

import hashlib
import os
import time


def get_repo_root_path() -> str:
    """
    Get the root path to the top level directory of this repository

    :return:    The absolute path to the repository root
    """
    return os.path.dirname(
        os.path.abspath(os.path.join(os.path.realpath(__file__), "../"))
    )


def static_path(*parts: str) -> str:
    """
    :param parts:   Path components below Static/
    :return:        The absolute path to a file shipped in Static/
    """
    return os.path.join(get_repo_root_path(), "Static", *parts)


def content_digest(text: str) -> str:
    """
    :param text:    The contents of an input file
    :return:        A hex digest identifying the contents, used in run reports
    """
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


class stopwatch:
    # pylint: disable=invalid-name
    """
    A context manager that measures the wall-clock time spent inside it. Meant to be used via:

    ```
    with stopwatch() as watch:
        do_work()
    print(watch.elapsed_ms)
    ```
    """

    elapsed_ms: int

    def __init__(self) -> None:
        self.elapsed_ms = 0
        self._started = 0.0

    def __enter__(self) -> "stopwatch":
        self._started = time.perf_counter()
        return self

    def __exit__(self, *_: object) -> None:
        self.elapsed_ms = int(round((time.perf_counter() - self._started) * 1000))

