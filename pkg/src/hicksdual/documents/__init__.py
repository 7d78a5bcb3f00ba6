"""Economy documents and the worked example fixtures."""

from hicksdual.documents.codec import (
    EconomyDocument,
    document_to_dict,
    dumps_document,
    load_document,
    loads_document,
    parse_document,
    write_document,
)
from hicksdual.documents.fixtures import FIXTURES, write_fixtures

__all__ = [
    "FIXTURES",
    "EconomyDocument",
    "document_to_dict",
    "dumps_document",
    "load_document",
    "loads_document",
    "parse_document",
    "write_document",
    "write_fixtures",
]
