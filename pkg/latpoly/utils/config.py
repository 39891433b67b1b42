"""latpoly configuration management utility."""
import configparser
import json
import tokenize
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import tomlkit
import typer
import yaml

from .enumeration import resolve_threads

# Constants.
CONFIG_SECTIONS = {
    ".cfg": "latpoly",
    ".toml": "tool.latpoly",
    ".json": "latpoly",
    ".yaml": "latpoly",
    ".yml": "latpoly",
}

#: Exit status of usage errors (EX_USAGE).
USAGE_EXIT = 64


@dataclass
class Config:

    """latpoly run settings dataclass."""

    def __post_init__(self):
        if self.config is not None:
            file_path = self.config
            self.config = None
            ParseConfigFile(file_path, self)
        else:
            self._check_threads()
            self._check_budget()
            self._check_tmax()
            self._check_output()

    config: Optional[Path] = None
    threads: Optional[int] = None
    budget: Optional[int] = None
    output: Optional[Path] = None
    tmax: int = 12
    verbose: bool = False
    quiet: bool = False
    silence: bool = False
    saturation: bool = False
    tikz: bool = False

    @staticmethod
    def _usage_error(message: str) -> None:
        typer.secho(message, bold=True, err=True)
        raise typer.Exit(USAGE_EXIT)

    def _check_threads(self) -> None:
        # `None` means "all CPUs"; LATPOLY_THREADS caps any value.
        if self.threads is not None and int(self.threads) < 1:
            Config._usage_error(
                f"--threads: {self.threads} is not a positive number 😅"
            )
        self.threads = resolve_threads(self.threads and int(self.threads))

    def _check_budget(self) -> None:
        if self.budget is not None:
            self.budget = int(self.budget)
            if self.budget < 1:
                Config._usage_error(
                    f"--budget: {self.budget} is not a positive node count 😅"
                )

    def _check_tmax(self) -> None:
        self.tmax = int(self.tmax)
        if self.tmax < 1:
            Config._usage_error(f"--tmax: {self.tmax} is not a positive number 😅")

    def _check_output(self) -> None:
        if self.output is not None:
            self.output = Path(self.output)
            if self.output.exists() and not self.output.is_dir():
                Config._usage_error(
                    f"--output: {str(self.output)!r} exists and is not a directory 😅"
                )


class ParseConfigFile:

    """Config file parser.

    :param file_path: config file path.
    :param config: Config instance as base.
    """

    def __init__(self, file_path: Path, config: Config):
        self._path = file_path
        self._config = config
        self._section = CONFIG_SECTIONS.get(self._path.suffix, None)
        self.parse()
        self._config.__post_init__()

    def parse(self) -> None:
        """Get config from a `cfg`/`toml`/`json`/`yaml`/`yml` file."""
        if not self._path.is_file():
            typer.secho(
                f"Config file {str(self._path)!r} does not exist 😅",
                bold=True,
                err=True,
            )
            raise typer.Exit(USAGE_EXIT)
        if self._section is None:
            typer.secho(
                f"Config file {str(self._path)!r} is not supported 😅",
                bold=True,
                err=True,
            )
            typer.secho(f"Supported types: {CONFIG_SECTIONS.keys()}.", err=True)
            raise typer.Exit(USAGE_EXIT)
        getattr(self, f"_parse_{self._path.suffix.strip('.')}")()

    def _parse_cfg(self) -> None:
        # Parse `.cfg` file.
        parser = configparser.ConfigParser(allow_no_value=True)
        parser.read(self._path)
        cfg_data = parser._sections.get(self._section, {})  # type: ignore

        def cast_bool(v: str) -> Union[str, bool]:
            if v.lower() == "true":
                return True
            elif v.lower() == "false":
                return False
            return v

        self._config_loader({k: cast_bool(v) for k, v in cfg_data.items()})

    def _parse_toml(self) -> None:
        # Parse `.toml` file.
        with tokenize.open(self._path) as stream:
            parsed_toml = tomlkit.parse(stream.read())
        tool, latpoly = self._section.split(".")
        configs = parsed_toml.get(tool, {}).get(latpoly, {})
        self._config_loader(configs)

    def _parse_json(self) -> None:
        # Parse `.json` file.
        with tokenize.open(self._path) as stream:
            parsed_json = json.load(stream)
        self._config_loader(parsed_json.get(self._section, {}))

    def _parse_yaml(self) -> None:
        # Parse `.yaml` file.
        with tokenize.open(self._path) as stream:
            parsed_yaml = yaml.load(stream, Loader=yaml.SafeLoader)
        self._config_loader(parsed_yaml.get(self._section, {}))

    def _parse_yml(self) -> None:
        # Support `.yml` file.
        return self._parse_yaml()

    def _config_loader(self, config_dict: dict) -> None:
        # k, v: config loader.
        if config_dict:
            for k, v in config_dict.items():
                k = k.replace("-", "_")
                if k == "config" or not hasattr(Config, k):
                    continue
                if k == "output" and v is not None:
                    v = Path(v)
                setattr(self._config, k, v)
