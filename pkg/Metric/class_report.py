"""
A module that holds ClassReport, the verdict of a single graph class check
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from typing_extensions import get_args

from Common.geo_types import JSON, ClassName

CLASS_NAMES = get_args(ClassName)


@dataclass(frozen=True)
class ClassReport:
    """
    Whether a graph belongs to a class, and when it does not, the first violating configuration in lexicographic
    order. What the witness tuple holds depends on the class (see the checker that produced it). For composite
    classes `reason` names the sub-condition that failed. `parameter` carries the clique bound of the k-SD check.
    """

    class_name: ClassName
    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    reason: Optional[str] = None
    parameter: Optional[int] = None

    def __post_init__(self) -> None:
        if self.class_name not in CLASS_NAMES:
            raise ValueError(f"unknown graph class {self.class_name!r}")
        if self.holds and self.witness is not None:
            raise ValueError("a passing ClassReport cannot carry a witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing ClassReport must carry a witness")

    def summary(self) -> Dict[str, JSON]:
        """
        :return:    A JSON-ready description of this report
        """
        summary: Dict[str, JSON] = {
            "class": self.class_name,
            "holds": self.holds,
            "witness": None if self.witness is None else list(self.witness),
        }
        if self.reason is not None:
            summary["reason"] = self.reason
        if self.parameter is not None:
            summary["k"] = self.parameter
        return summary

    def because(self, class_name: ClassName) -> "ClassReport":
        """
        Reuse the failure of a sub-condition as the failure of a composite class

        :param class_name:  The composite class
        :return:            A report for the composite class with this report's witness
        """
        return ClassReport(
            class_name,
            self.holds,
            self.witness,
            None if self.holds else (self.reason or self.class_name),
        )
