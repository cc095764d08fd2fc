from .logicfile import (
    GOLDEN,
    LogicFileError,
    golden_text,
    load_logic,
    parse_logic_file,
    parse_logic_text,
    parse_mv_file,
    parse_mv_text,
    serialize_logic,
    serialize_mv,
)
from .main import build_parser, main, parse_query, run
