""" Regions Controller Definition """

import logging
from typing import Optional

from ..contracts.cap_exceeded_error import CapExceededError
from ..contracts.pauli_op import PauliOp
from ..contracts.region import Region
from ..contracts.report import Report
from ..contracts.subsystem_code import SubsystemCode
from ..services.regions import (
    boundary,
    cleaning_check,
    complement_witness,
    interaction_range,
    l,
    l_bare,
    restriction_check,
    restrict_group,
    supported_subgroup,
)
from .abstract_controller import AbstractController


class RegionsController(AbstractController):
    """
    Regions Controller
    Logical-operator counts and region checks for one region of a code.

    Methods
    -------
    execute(self, code: SubsystemCode, region: Region, interaction: Optional[int], cap: Optional[int]) -> Report
        Executes the command.
    """

    def execute(
        self, code: SubsystemCode, region: Region, interaction: Optional[int] = None, cap: Optional[int] = None
    ) -> Report:
        """
        Evaluates l, l_bare, the cleaning identity and, with a layout, the boundary and
        the restriction check.

        Parameters
        ----------
        code: SubsystemCode
            The code.
        region: Region
            M.
        interaction: Optional[int]
            Interaction range; the widest generator by default.
        cap: Optional[int]
            Enumeration cap override.

        Returns
        -------
        report: Report
            passed is False when the cleaning identity or the restriction check fails.
        """

        complement: Region = region.complement()
        witness: Optional[PauliOp] = complement_witness(code.gauge, region)
        cleaning: bool = cleaning_check(code, region)
        results: dict = {
            "members": region.ordered(),
            "dim_restricted": restrict_group(code.gauge, region).dim,
            "dim_supported": supported_subgroup(code.gauge, region).dim,
            "l": l(code, region),
            "l_bare": l_bare(code, region),
            "l_complement": l(code, complement),
            "l_bare_complement": l_bare(code, complement),
            "cleaning": cleaning,
            "complement_witness": None if witness is None else str(witness),
        }
        passed: bool = cleaning
        if code.layout is not None:
            reach: int = interaction_range(code) if interaction is None else interaction
            results["interaction_range"] = reach
            results["boundary"] = boundary(code.layout, region, reach).ordered()
            if code.k >= 1:
                try:
                    restriction = restriction_check(code, region, interaction=reach, cap=self.cap(cap))
                except CapExceededError as error:
                    logging.warning("regions: restriction check skipped: %s", str(error))
                    results["restriction"] = None
                else:
                    results["restriction"] = restriction.dict()
                    passed = passed and restriction.holds
        logging.debug("regions: |M|=%s l=%s l_bare=%s passed=%s", len(region), results["l"], results["l_bare"], passed)
        return Report(
            command="regions",
            arguments={"interaction": interaction, "cap": self.cap(cap)},
            results=results,
            passed=passed,
            summary=f"l={results['l']} l_bare={results['l_bare']} cleaning={cleaning}",
        )
