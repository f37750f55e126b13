from pathlib import Path
from typing import Any, Dict, Optional, Union
import time

from ..families import get_family
from ..formats.cocoa_format import format_document
from ..formats.hoa import format_cocoa_hoa, format_hoa
from ..models.automaton import Automaton
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams
from ..utils.config_manager import ConfigManager
from ..utils.errors import CocoaKitError
from ..utils.logger import get_logger


OUTPUT_FORMATS = ("aut", "hoa")


class GeneratorService:
    """Builds family members and writes them as AUT/COCOA or HOA text"""

    def __init__(self, config: Dict[str, Any] = None):
        self.logger = get_logger(self.__class__.__name__)
        self.config_manager = ConfigManager()
        self.config = config or self.config_manager.load_config()

    def generate(self, family: str, k: Optional[int] = None, i: Optional[int] = None,
                 j: Optional[int] = None, nondominated: bool = False) -> Dict[str, Any]:
        start_time = time.time()
        try:
            generator = get_family(family)
            params = FamilyParams(k if k is not None else 1, i, j, nondominated)
            if generator.takes_k and k is None:
                raise CocoaKitError(f"family {family} needs --k")
            value = generator.generate(params)
        except CocoaKitError as e:
            self.logger.log_error(e, {"operation": "generate", "family": family, "k": k})
            return {"success": False, "error": str(e), "family": family}

        duration = time.time() - start_time
        self.logger.log_performance("generate", duration, family=family)
        return {
            "success": True,
            "family": family,
            "value": value,
            "kind": "cocoa" if isinstance(value, Cocoa) else "aut",
            "states": self._state_count(value),
            "duration": duration
        }

    def render(self, value: Union[Automaton, Cocoa], output_format: str = "aut") -> str:
        if output_format == "hoa":
            return format_cocoa_hoa(value) if isinstance(value, Cocoa) else format_hoa(value)
        return format_document(value)

    def write(self, value: Union[Automaton, Cocoa], out: Optional[str],
              output_format: str = "aut") -> Optional[Path]:
        """Write to ``out``; returns None when no path is given"""
        text = self.render(value, output_format)
        if not out:
            return None
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        return path

    @staticmethod
    def _state_count(value: Union[Automaton, Cocoa]) -> int:
        if isinstance(value, Cocoa):
            return sum(member.state_count for member in value.members)
        return value.state_count
