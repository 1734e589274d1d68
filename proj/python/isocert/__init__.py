"""Group-action certificates: rank gates, effective Sylow characters, sphere models."""

from isocert._isocert import (
    Certificate,
    Group,
    ParseError,
    ScaleLimitError,
    catalog_group,
    catalog_ids,
    certify,
    character_table,
    fusion,
    load_certificate,
    load_group,
    parse_certificate,
    parse_group,
    qd_free,
    rank,
    search_effective,
    verify,
)

__all__ = [
    "Certificate",
    "Group",
    "ParseError",
    "ScaleLimitError",
    "catalog_group",
    "catalog_ids",
    "certify",
    "character_table",
    "fusion",
    "load_certificate",
    "load_group",
    "parse_certificate",
    "parse_group",
    "qd_free",
    "rank",
    "search_effective",
    "verify",
]
