"""latpoly report utility."""
from dataclasses import dataclass
from pathlib import Path
from typing import List

import typer

from . import config

#: Exit status of a run that met bad input (EX_DATAERR).
DOMAIN_EXIT = 65


def _plural(count: int, noun: str, plural: str = "") -> str:
    return f"{count} {noun if count == 1 else plural or noun + 's'}"


@dataclass
class Report:

    """Provide latpoly report counters.

    Can be rendered with `str(report)`.
    """

    #: Configured instance.
    configs: config.Config

    @staticmethod
    def secho(
        message: str,
        *,  # Force kwargs.
        bold: bool,
        isedit: bool = False,
        issuccess: bool = False,
        iswarning: bool = False,
        iserror: bool = False,
    ) -> None:
        """Print a colored message.

        :param message: a string message.
        :param bold: is if a bold message.
        :param isedit: is it an output message ~> stdout.
        :param issuccess: is it a success message  ~> stdout.
        :param iswarning: is it a warning message ~> stderr.
        :param iserror: is it an error message ~> stderr.
        """
        if isedit:
            color = typer.colors.BRIGHT_BLUE
        elif issuccess:
            color = typer.colors.BRIGHT_GREEN
        elif iswarning:
            color = typer.colors.BRIGHT_YELLOW
        elif iserror:
            color = typer.colors.BRIGHT_RED
        else:
            raise ValueError("Please specify one of the is* args.")
        typer.echo(
            typer.style(" ", bg=color) + " " + typer.style(message, bold=bold),
            err=bool(iswarning or iserror),
        )

    def info(self, message: str) -> None:
        """Write a plain result line to stdout (hidden by `--silence` only)."""
        if not self.configs.silence:
            typer.echo(message)

    #: Total examined polygons counter.
    _examined: int = 0

    def examined(self, count: int) -> None:
        self._examined += count

    #: Total violations counter.
    _violations: int = 0

    def violation(self, msg: str) -> None:
        """Increment `self._violations`. Write a msg to stderr.

        :param msg: what was violated and by which polygon.
        """
        if not self.configs.silence:
            Report.secho(f"{msg} ⛔", bold=False, iserror=True)
        self._violations += 1

    #: Total equality classes counter.
    _equality_classes: int = 0

    #: Equality classes without a matching family.
    _unlisted_classes: int = 0

    def equality_class(self, polygon: str, family: str) -> None:
        """Count an equality class. Write it to stdout in verbose mode.

        :param polygon: the class representative.
        :param family: its family label or "UNLISTED".
        """
        if self.configs.verbose:
            Report.secho(f"{polygon} ~ {family}", bold=False, isedit=True)
        self._equality_classes += 1
        if family == "UNLISTED":
            self._unlisted_classes += 1

    #: Total findings counter (facts worth a look, not failures).
    _findings: int = 0

    def finding(self, msg: str) -> None:
        if not any([self.configs.quiet, self.configs.silence]):
            Report.secho(f"{msg} 🔎", bold=False, iswarning=True)
        self._findings += 1

    #: Total written files counter.
    _written_files: int = 0

    def written_file(self, path: Path) -> None:
        """Increment `self._written_files`. Write a message to stdout.

        :param path: the written file path.
        """
        if not any([self.configs.quiet, self.configs.silence]):
            Report.secho(f"{path} was written! 🚀", bold=False, isedit=True)
        self._written_files += 1

    #: Set when a search ran out of budget.
    _incomplete: bool = False

    def incomplete(self, msg: str) -> None:
        if not self.configs.silence:
            Report.secho(f"{msg} ⚠️", bold=False, iswarning=True)
        self._incomplete = True

    #: Total number of failures, by kind.
    _usage_failures: int = 0
    _domain_failures: int = 0

    def failure(self, msg: str, *, domain: bool = False) -> None:
        """Increment the failure counters. Write a msg to stderr.

        :param msg: a failure msg.
        :param domain: set for inputs outside of an operation's domain.
        """
        if not self.configs.silence:
            Report.secho(f"{msg} ⛔", bold=False, iserror=True)
        if domain:
            self._domain_failures += 1
        else:
            self._usage_failures += 1

    @property
    def exit_code(self) -> int:
        """Return an exit code.

        :returns: an exit code (0, 1, 2, 64, 65).
        """
        if self._usage_failures:
            return config.USAGE_EXIT
        if self._domain_failures:
            return DOMAIN_EXIT
        if self._violations:
            return 1
        if self._incomplete:
            return 2
        return 0

    def __str__(self) -> str:
        """Render a colored report of the current state.

        Use `typer.unstyle` to remove colors.

        :returns: a colored report of the current state.
        """
        if self.configs.silence:
            return ""

        report: List[str] = []
        if self._examined:
            report.append(
                typer.style(_plural(self._examined, "polygon") + " examined", bold=True)
            )
        if self._violations:
            report.append(
                typer.style(
                    _plural(self._violations, "violation") + " found", bold=True
                )
            )
        if self._equality_classes:
            report.append(
                typer.style(
                    _plural(
                        self._equality_classes, "equality class", "equality classes"
                    )
                    + f" ({self._unlisted_classes} unlisted)",
                    bold=False,
                )
            )
        if self._findings:
            report.append(typer.style(_plural(self._findings, "finding"), bold=False))
        if self._written_files:
            plural = self._written_files > 1
            report.append(
                typer.style(
                    _plural(self._written_files, "file")
                    + (" were written" if plural else " was written"),
                    bold=False,
                )
            )
        failures = self._usage_failures + self._domain_failures
        if failures:
            report.append(typer.style(_plural(failures, "failure"), bold=False))

        if failures:
            s = "were errors" if failures > 1 else "was an error"
            done_msg = f"Oh no, there {s}! 💔 ☹️"
        elif self._violations:
            done_msg = "Violations found! 💔"
        elif self._incomplete:
            done_msg = "Incomplete run, the budget was exhausted. ⏳"
        else:
            done_msg = "All done! 💪 😎"

        if not report:
            return typer.style(done_msg + "\n", bold=True)
        sdone_msg = typer.style(done_msg + "\n", bold=True)
        return "\n" + sdone_msg + ", ".join(report) + ".\n"
