from typing import Any, Dict, List, Optional, Union
import time

from ..automata.chain import chain_validate
from ..automata.constructions import cocoa_to_dpw, mh_determinize
from ..automata.decision import dpw_contains, dpw_equivalent, dpw_is_empty
from ..automata.lasso import (
    cocoa_accepts, cocoa_color, dpw_accepts, dpw_color, ncw_accepts, sample_lassos
)
from ..automata.lowerbound import certify_lower_bound, verify_certificate
from ..formats.certificate_format import save_certificate
from ..formats.cocoa_format import load_document
from ..models.automaton import Automaton
from ..models.cocoa import Cocoa
from ..models.lasso_word import LassoWord
from ..utils.config_manager import ConfigManager
from ..utils.errors import CocoaKitError, LowerBoundViolation, NotDeterministicError
from ..utils.logger import get_logger


CHECK_KINDS = ("contains", "equiv", "empty", "chain", "certify", "sample")

Document = Union[Automaton, Cocoa]


class AnalysisService:
    """Evaluation and decision procedures over AUT/COCOA documents.

    Every check returns a result dict: ``success`` is False only for usage or
    parse problems, ``holds`` carries the semantic answer.
    """

    def __init__(self, config: Dict[str, Any] = None):
        self.logger = get_logger(self.__class__.__name__)
        self.config_manager = ConfigManager()
        self.config = config or self.config_manager.load_config()

    def load(self, path: str) -> Document:
        return load_document(path)

    @staticmethod
    def as_dpw(document: Document) -> Automaton:
        """Deterministic parity view of an automaton or chain"""
        if isinstance(document, Cocoa):
            return cocoa_to_dpw(document)
        if document.is_deterministic:
            return document
        if document.is_cobuchi:
            return mh_determinize(document)
        raise NotDeterministicError(
            f"automaton {document.name} is nondeterministic and not co-Buechi")

    def evaluate(self, document: Document, lasso: str) -> Dict[str, Any]:
        try:
            word = LassoWord.parse(lasso)
            if isinstance(document, Cocoa):
                color = cocoa_color(document, word)
                accepted = cocoa_accepts(document, word)
            elif document.is_deterministic:
                color = dpw_color(document, word)
                accepted = color % 2 == 0
            else:
                accepted = ncw_accepts(document, word)
                color = 2 if accepted else 1
        except CocoaKitError as e:
            self.logger.log_error(e, {"operation": "evaluate", "lasso": lasso})
            return {"success": False, "error": str(e)}
        return {"success": True, "color": color, "accepted": accepted, "lasso": str(word)}

    def check(self, kind: str, paths: List[str], k: Optional[int] = None,
              cert_out: Optional[str] = None) -> Dict[str, Any]:
        """Route a check by kind; loads every path first"""
        start_time = time.time()
        try:
            documents = [self.load(path) for path in paths]
            if kind == "contains":
                result = self.contains(*self._two(documents, kind))
            elif kind == "equiv":
                result = self.equivalent(*self._two(documents, kind))
            elif kind == "empty":
                result = self.empty(self._one(documents, kind))
            elif kind == "chain":
                result = self.chain(self._one(documents, kind))
            elif kind == "certify":
                if k is None:
                    raise CocoaKitError("check certify needs --k")
                result = self.certify(self._one(documents, kind), k, cert_out)
            elif kind == "sample":
                result = self.sample(self._one(documents, kind))
            else:
                raise CocoaKitError(f"unknown check {kind!r}; choose from {', '.join(CHECK_KINDS)}")
        except CocoaKitError as e:
            self.logger.log_error(e, {"operation": "check", "kind": kind, "paths": paths})
            return {"success": False, "kind": kind, "error": str(e)}

        result["duration"] = time.time() - start_time
        witness = result.get("witness")
        self.logger.log_check(kind, result["holds"], ",".join(paths),
                              witness=str(witness) if witness is not None else None,
                              duration=result["duration"])
        return result

    @staticmethod
    def _one(documents: List[Document], kind: str) -> Document:
        if len(documents) != 1:
            raise CocoaKitError(f"check {kind} takes one file, got {len(documents)}")
        return documents[0]

    @staticmethod
    def _two(documents: List[Document], kind: str):
        if len(documents) != 2:
            raise CocoaKitError(f"check {kind} takes two files, got {len(documents)}")
        return documents

    def contains(self, a: Document, b: Document) -> Dict[str, Any]:
        holds, witness = dpw_contains(self.as_dpw(a), self.as_dpw(b))
        return {"success": True, "kind": "contains", "holds": holds, "witness": witness}

    def equivalent(self, a: Document, b: Document) -> Dict[str, Any]:
        holds, witness = dpw_equivalent(self.as_dpw(a), self.as_dpw(b))
        return {"success": True, "kind": "equiv", "holds": holds, "witness": witness}

    def empty(self, document: Document) -> Dict[str, Any]:
        holds, witness = dpw_is_empty(self.as_dpw(document))
        return {"success": True, "kind": "empty", "holds": holds, "witness": witness}

    def chain(self, document: Document) -> Dict[str, Any]:
        if not isinstance(document, Cocoa):
            raise CocoaKitError("check chain needs a COCOA file")
        members = tuple(mh_determinize(member) for member in document.members)
        diagnostics = chain_validate(Cocoa(members, name=document.name))
        return {"success": True, "kind": "chain", "holds": not diagnostics,
                "diagnostics": diagnostics}

    def certify(self, document: Document, k: int,
                cert_out: Optional[str] = None) -> Dict[str, Any]:
        dpw = self.as_dpw(document)
        try:
            certificate = certify_lower_bound(dpw, k)
        except LowerBoundViolation as violation:
            return {"success": True, "kind": "certify", "holds": False, "violation": violation}

        diagnostics = verify_certificate(dpw, certificate, k)
        result = {
            "success": True,
            "kind": "certify",
            "holds": not diagnostics,
            "certificate": certificate,
            "bound": certificate.bound,
            "states": dpw.state_count,
            "diagnostics": diagnostics
        }
        if cert_out:
            result["cert_path"] = str(save_certificate(certificate, cert_out))
        return result

    def sample(self, document: Document) -> Dict[str, Any]:
        """Direct evaluation against the deterministic view on sampled lassos"""
        dpw = self.as_dpw(document)
        checked = 0
        for word in sample_lassos(dpw.alphabet, self.config['sampling']):
            checked += 1
            if self._accepts(document, word) != dpw_accepts(dpw, word):
                return {"success": True, "kind": "sample", "holds": False,
                        "witness": word, "checked": checked}
        return {"success": True, "kind": "sample", "holds": True, "checked": checked}

    @staticmethod
    def _accepts(document: Document, word: LassoWord) -> bool:
        if isinstance(document, Cocoa):
            return cocoa_accepts(document, word)
        if document.is_deterministic:
            return dpw_accepts(document, word)
        return ncw_accepts(document, word)
