"""
Modulo di configurazione globale del software.

Gestisce il caricamento e la validazione delle configurazioni da file YAML/JSON.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union
import yaml
import json
from enum import Enum

from singstar.core.errors import SingstarError


class FormatoOutput(str, Enum):
    """Formati di output supportati."""

    TEXT = "text"
    MARKDOWN = "markdown"
    JSON = "json"


class ClasseJ(str, Enum):
    """Classe del j-invariante della curva ellittica centrale."""

    ZERO = "zero"
    ONE = "one"
    GENERIC = "generic"


@dataclass
class ReportConfig:
    """Configurazione dei report."""

    formato: FormatoOutput = FormatoOutput.TEXT

    def __post_init__(self) -> None:
        self.formato = FormatoOutput(self.formato)


@dataclass
class SimmetriaConfig:
    """Valori di default per i report di simmetria."""

    epsilon: Optional[int] = None
    """Grado della 2-forma; se None il limite di Ganter non viene calcolato."""

    j_class: Optional[ClasseJ] = None

    def __post_init__(self) -> None:
        if self.j_class is not None:
            self.j_class = ClasseJ(self.j_class)
        if self.epsilon is not None and not isinstance(self.epsilon, int):
            raise SingstarError(f"epsilon deve essere intero, ricevuto {self.epsilon!r}")


@dataclass
class ReticoloConfig:
    """Opzioni del modulo reticolo."""

    limite_automorfismi: int = 40320
    """Massimo |Aut Γ| enumerato nei test di fedeltà."""

    def __post_init__(self) -> None:
        if self.limite_automorfismi < 1:
            raise SingstarError("limite_automorfismi deve essere positivo")


@dataclass
class QuozienteConfig:
    """Opzioni del motore dei quozienti."""

    seed_blow_down: Optional[int] = None


@dataclass
class Config:
    """
    Configurazione globale del software.

    Attributes:
        report: Formato dei report
        simmetria: Default per i report di simmetria
        reticolo: Limiti del modulo reticolo
        quoziente: Opzioni del motore dei quozienti
    """

    report: ReportConfig = field(default_factory=ReportConfig)
    simmetria: SimmetriaConfig = field(default_factory=SimmetriaConfig)
    reticolo: ReticoloConfig = field(default_factory=ReticoloConfig)
    quoziente: QuozienteConfig = field(default_factory=QuozienteConfig)

    @classmethod
    def from_yaml(cls, filepath: Union[str, Path]) -> "Config":
        """
        Carica configurazione da file YAML.

        Args:
            filepath: Percorso del file YAML

        Returns:
            Oggetto Config
        """
        with open(filepath, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return cls.from_dict(data or {})

    @classmethod
    def from_json(cls, filepath: Union[str, Path]) -> "Config":
        """Carica configurazione da file JSON."""
        with open(filepath, "r", encoding="utf-8") as f:
            data = json.load(f)
        return cls.from_dict(data)

    @classmethod
    def da_file(cls, filepath: Union[str, Path]) -> "Config":
        """Sceglie il lettore in base all'estensione del file."""
        suffisso = Path(filepath).suffix.lower()
        if suffisso in (".yaml", ".yml"):
            return cls.from_yaml(filepath)
        if suffisso == ".json":
            return cls.from_json(filepath)
        raise SingstarError(f"Formato di configurazione non supportato: {suffisso}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Config":
        """
        Crea configurazione da dizionario.

        Le chiavi sconosciute vengono ignorate.
        """
        def _filtra(sezione: str, tipo: type) -> Dict[str, Any]:
            valori = data.get(sezione, {}) or {}
            return {k: v for k, v in valori.items() if k in tipo.__annotations__}

        try:
            return cls(
                report=ReportConfig(**_filtra("report", ReportConfig)),
                simmetria=SimmetriaConfig(**_filtra("simmetria", SimmetriaConfig)),
                reticolo=ReticoloConfig(**_filtra("reticolo", ReticoloConfig)),
                quoziente=QuozienteConfig(**_filtra("quoziente", QuozienteConfig)),
            )
        except ValueError as exc:
            raise SingstarError(f"configurazione non valida: {exc}") from exc

    def to_dict(self) -> Dict[str, Any]:
        """Converte configurazione in dizionario."""
        return {
            "report": {"formato": self.report.formato.value},
            "simmetria": {
                "epsilon": self.simmetria.epsilon,
                "j_class": self.simmetria.j_class.value if self.simmetria.j_class else None,
            },
            "reticolo": {"limite_automorfismi": self.reticolo.limite_automorfismi},
            "quoziente": {"seed_blow_down": self.quoziente.seed_blow_down},
        }

    def save_yaml(self, filepath: Union[str, Path]) -> None:
        """Salva configurazione su file YAML."""
        with open(filepath, "w", encoding="utf-8") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, allow_unicode=True)

    def save_json(self, filepath: Union[str, Path]) -> None:
        """Salva configurazione su file JSON."""
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, ensure_ascii=False)
