from .aut_format import format_aut, parse_aut
from .cocoa_format import (
    format_cocoa, format_document, load_document, parse_cocoa, parse_document, save_document
)
from .hoa import format_cocoa_hoa, format_hoa
from .certificate_format import (
    format_certificate, load_certificate, parse_certificate, save_certificate
)
